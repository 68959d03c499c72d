#pragma once

// Brute-force references for the test suites. Nothing here calls the
// library's matrix-power or invariant code paths.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "srginv/graph.hpp"

namespace srginv::oracle {

using Dense = std::vector<std::vector<std::uint64_t>>;

Dense adjacency(const Graph& g);
Dense multiply(const Dense& a, const Dense& b);
/// p - 1 successive multiplications, no squaring.
Dense naive_power(const Dense& m, unsigned p);
std::uint64_t trace(const Dense& m);

/// v^2 x v^2 matrices indexed by (a, b) -> a * v + b.
Dense dense_tilde(const Graph& g);  // A_ab A_ac delta_bd
Dense dense_bar(const Graph& g);    // A_ab A_ac A_bd

/// A^2 == k I + lambda A + mu (J - I - A), entrywise.
bool srg_identity_holds(const Graph& g, std::uint64_t k, std::uint64_t lambda, std::uint64_t mu);

/// Independent closed-walk count by explicit walk enumeration (iterative).
std::uint64_t enumerate_closed_walks(const Graph& g, Vertex start, unsigned length,
                                     const std::vector<bool>& allowed);

Graph random_graph(std::size_t v, double density, std::uint64_t seed);

struct Fixture {
  std::string name;
  Graph graph;
};
/// Named graphs of varied structure, all with at least one edge.
std::vector<Fixture> fixtures();

}  // namespace srginv::oracle
