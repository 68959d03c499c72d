#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srginv/matrix.hpp"

namespace srginv {

using Vertex = std::uint32_t;

/// Undirected simple graph stored as packed adjacency bit rows.
///
/// Graphs are immutable once built; use GraphBuilder or one of the parsers.
/// Symmetry and the zero diagonal are enforced at construction.
class Graph {
 public:
  Graph() = default;  // the 0-vertex graph

  std::size_t order() const { return order_; }
  std::size_t edge_count() const { return edges_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex a, Vertex b) const {
    return (bits_[a * words_ + (b >> 6)] >> (b & 63U)) & 1U;
  }
  std::size_t degree(Vertex a) const;
  std::span<const std::uint64_t> row(Vertex a) const {
    return {bits_.data() + a * words_, words_};
  }

  /// Dense 0/1 copy of the adjacency matrix.
  Matrix adjacency_matrix() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order);

  /// Adds the undirected edge {a, b}; self-loops and out-of-range vertices throw.
  GraphBuilder& add_edge(Vertex a, Vertex b);
  Graph build() &&;

 private:
  Graph g_;
};

Graph make_graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);

/// (v, k, lambda, mu). lambda is undefined for edgeless graphs and mu for
/// complete graphs, where no pair of the corresponding kind exists.
struct SrgParams {
  std::uint32_t v = 0;
  std::uint32_t k = 0;
  std::optional<std::uint32_t> lambda;
  std::optional<std::uint32_t> mu;

  /// "v-k-lambda-mu", with "?" for an undefined parameter.
  std::string label() const;
  auto operator<=>(const SrgParams&) const = default;
};

struct SrgCheck {
  std::optional<SrgParams> params;
  std::string reason;  // why the graph is not an SRG; empty on success
  explicit operator bool() const { return params.has_value(); }
};

// ---- parsing ---------------------------------------------------------------

enum class InputFormat { automatic, graph6, rows };

Graph parse_graph6(std::string_view record);
std::string to_graph6(const Graph& g);
/// One graph per non-empty line; a leading ">>graph6<<" header is skipped.
std::vector<Graph> parse_graph6_lines(std::string_view text);
std::vector<Graph> parse_adjacency_rows(std::string_view text);
/// Auto mode selects rows when the first non-blank character is '0' or '1'.
std::vector<Graph> parse_graphs(std::string_view text, InputFormat format);
std::vector<Graph> read_graphs(const std::filesystem::path& path, InputFormat format);

// ---- queries ---------------------------------------------------------------

std::vector<Vertex> neighborhood(const Graph& g, Vertex a);
/// Subgraph on the strictly increasing vertex list `s`, relabeled 0..|s|-1.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
Graph complement(const Graph& g);

/// Verifies the SRG conditions by common-neighbor counting over all pairs.
SrgCheck check_srg(const Graph& g);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator==(const Rational&) const = default;
};

struct Eigenvalue {
  double value = 0.0;
  std::optional<Rational> exact;  // set when the discriminant is a perfect square
};

/// The two non-principal eigenvalues (r >= s) of an SRG with parameters p.
std::pair<Eigenvalue, Eigenvalue> srg_eigenvalues(const SrgParams& p);

/// Tr(A^p) for p = 1..pmax, one value (exact) or two residues (modular) each.
InvariantVector trace_power_signature(const Graph& g, unsigned pmax,
                                      Arithmetic arithmetic = Arithmetic::exact);

}  // namespace srginv
