#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "srginv/graph.hpp"
#include "srginv/vertex_invariants.hpp"

namespace srginv {

/// mapping[a] is the image of vertex a. Applying it to a source graph g
/// yields h with h(mapping[a], mapping[b]) = g(a, b).
struct PermutationWitness {
  std::vector<Vertex> mapping;
  bool operator==(const PermutationWitness&) const = default;
};

bool is_bijection(const PermutationWitness& w, std::size_t order);
Graph apply_permutation(const Graph& g, const PermutationWitness& w);

enum class IsoOutcome { isomorphic, non_isomorphic, undecided };

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::undecided;
  std::optional<PermutationWitness> witness;  // maps g1 onto g2
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Exhaustive backtracking isomorphism test. When `blocks` is given, block i
/// of the first partition may only map onto block i of the second. Running
/// out of `node_budget` yields `undecided`, never a wrong answer.
/// Throws PreconditionError when the orders or degree sequences differ.
IsoResult are_isomorphic(const Graph& g1, const Graph& g2,
                         const std::optional<std::pair<VertexPartition, VertexPartition>>& blocks =
                             std::nullopt,
                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Conjugates g by a uniformly random permutation drawn from `seed`.
std::pair<Graph, PermutationWitness> random_relabel(const Graph& g, std::uint64_t seed);

/// Walks of exactly `length` steps from `start` back to `start` through
/// vertices of `allowed` only, counted by exhaustive search.
std::uint64_t count_closed_walks(const Graph& g, Vertex start, unsigned length,
                                 std::span<const Vertex> allowed);

}  // namespace srginv
