#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "srginv/graph.hpp"
#include "srginv/matrix.hpp"

namespace srginv {

/// Trace (one value) or ascending diagonal (degree(a) values) of the p-th
/// power of the adjacency matrix induced on the neighborhood of `a`.
///
/// Entry i of the diagonal counts closed walks of length p from the i-th
/// neighbor of `a` that stay inside that neighborhood.
InvariantVector nbhd_power_diag(const Graph& g, Vertex a, unsigned p, InvariantMode mode,
                                Arithmetic arithmetic = Arithmetic::exact);

struct VertexSignature {
  Vertex vertex = 0;
  InvariantVector values;
  bool operator==(const VertexSignature&) const = default;
};

/// Total order on invariant vectors: shorter first, then lexicographic.
bool signature_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Per-vertex concatenation of nbhd_power_diag over `powers`, in order.
std::vector<VertexSignature> vertex_signatures(const Graph& g, std::span<const unsigned> powers,
                                               InvariantMode mode,
                                               Arithmetic arithmetic = Arithmetic::exact);

struct GraphSignature {
  std::vector<InvariantVector> rows;  // sorted by signature_less
  std::optional<SrgParams> params;

  bool operator==(const GraphSignature& other) const { return rows == other.rows; }
};

GraphSignature graph_signature(const Graph& g, std::span<const unsigned> powers,
                               InvariantMode mode, Arithmetic arithmetic = Arithmetic::exact);
GraphSignature graph_signature(std::span<const VertexSignature> signatures);

struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;

  bool single_block() const { return blocks.size() == 1; }
  bool discrete() const;
  bool operator==(const VertexPartition&) const = default;
};

/// Groups vertices with identical signatures. Blocks are ordered by
/// ascending signature; vertices inside a block ascend.
VertexPartition partition_vertices(std::span<const VertexSignature> signatures);

/// `partition` refines `coarse` when every block lies inside one block of `coarse`.
bool refines(const VertexPartition& partition, const VertexPartition& coarse);

struct OutblockSignature {
  GraphSignature base;
  GraphSignature remainder;   // signature of g minus the first block
  std::vector<Vertex> removed;  // the first block
  bool refined = false;       // false when the partition had a single block

  bool operator==(const OutblockSignature& o) const {
    return refined == o.refined && base == o.base && remainder == o.remainder;
  }
};

/// Base signature extended with the signature of the subgraph left after
/// deleting the block with the smallest signature. Applied once.
OutblockSignature outblock_signature(const Graph& g, std::span<const unsigned> powers,
                                     InvariantMode mode,
                                     Arithmetic arithmetic = Arithmetic::exact);

}  // namespace srginv
