#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "srginv/graph.hpp"

// Small constructions used by tests, the acceptance suite and the CLI.
namespace srginv::named {

Graph empty_graph(std::size_t n);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);  // K_{1,leaves}, centre 0
Graph petersen();
Graph rook(std::size_t n);  // n x n rook's graph, vertex r*n + c
Graph shrikhande();
Graph paley(std::size_t q);  // q prime, q = 1 mod 4
Graph triangular(std::size_t n);  // line graph of K_n; pairs in lexicographic order
/// Toggles every adjacency between `set` and its complement.
Graph seidel_switch(const Graph& g, std::span<const Vertex> set);
/// The three Chang graphs, SRG(28,12,6,4).
std::vector<Graph> chang_graphs();
/// Cells (r, c) adjacent when they share row, column or symbol.
Graph latin_square_graph(const std::vector<std::vector<int>>& square);

}  // namespace srginv::named
