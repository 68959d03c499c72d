#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "srginv/graph.hpp"
#include "srginv/matrix.hpp"

namespace srginv {

struct DirectedEdge {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const DirectedEdge&) const = default;
};

/// Both orientations of every edge, sorted lexicographically.
class DirectedEdgeIndex {
 public:
  DirectedEdgeIndex() = default;
  explicit DirectedEdgeIndex(const Graph& g);

  std::size_t size() const { return pairs_.size(); }
  const DirectedEdge& operator[](std::size_t i) const { return pairs_[i]; }
  const std::vector<DirectedEdge>& pairs() const { return pairs_; }
  std::optional<std::size_t> find(Vertex tail, Vertex head) const;

 private:
  std::vector<DirectedEdge> pairs_;
};

/// Edge-pair matrix with entry((a,b),(c,d)) = A_ac * A_bd over directed edges.
///
/// The matrix is symmetric, so each row's nonzero columns double as the
/// column pattern. Rows are stored sparsely.
class BarMatrix {
 public:
  explicit BarMatrix(const Graph& g);

  const DirectedEdgeIndex& index() const { return index_; }
  std::size_t size() const { return index_.size(); }
  bool empty() const { return index_.size() == 0; }
  const std::vector<std::uint32_t>& row(std::size_t i) const { return rows_[i]; }
  bool entry(std::size_t i, std::size_t j) const;
  Matrix dense() const;

 private:
  DirectedEdgeIndex index_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

BarMatrix build_bar_matrix(const Graph& g);

/// diag(bar^p) for each requested power, sharing the vector walk.
std::vector<InvariantVector> bar_power_diagonals(const BarMatrix& bar,
                                                 const std::vector<unsigned>& powers,
                                                 Arithmetic arithmetic = Arithmetic::exact);

/// diag(bar^p) in DirectedEdgeIndex order (value_width slots per edge).
InvariantVector bar_power_diagonal(const BarMatrix& bar, unsigned p,
                                   Arithmetic arithmetic = Arithmetic::exact);

/// Trace or ascending diagonal of bar^p. Requires p >= 2.
InvariantVector bar_power_diag(const Graph& g, unsigned p, InvariantMode mode,
                               Arithmetic arithmetic = Arithmetic::exact);

struct EdgeBlock {
  InvariantVector value;
  std::vector<DirectedEdge> edges;
};

/// Directed edges grouped by their diag(bar^p) value, ascending by value.
std::vector<EdgeBlock> edge_partition(const Graph& g, unsigned p,
                                      Arithmetic arithmetic = Arithmetic::exact);

}  // namespace srginv
