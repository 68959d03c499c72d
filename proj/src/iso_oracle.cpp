#include "srginv/iso_oracle.hpp"

#include <algorithm>
#include <random>

#include "srginv/error.hpp"

namespace srginv {

bool is_bijection(const PermutationWitness& w, std::size_t order) {
  if (w.mapping.size() != order) return false;
  std::vector<bool> seen(order, false);
  for (Vertex x : w.mapping) {
    if (x >= order || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Graph apply_permutation(const Graph& g, const PermutationWitness& w) {
  if (!is_bijection(w, g.order())) throw PreconditionError("apply_permutation: not a bijection");
  GraphBuilder builder(g.order());
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : neighborhood(g, a))
      if (a < b) builder.add_edge(w.mapping[a], w.mapping[b]);
  return std::move(builder).build();
}

namespace {

class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2, std::vector<std::size_t> block1,
          std::vector<std::size_t> block2, std::uint64_t budget)
      : g1_(g1), g2_(g2), block1_(std::move(block1)), block2_(std::move(block2)),
        budget_(budget), map_(g1.order(), kUnset), used_(g2.order(), false) {
    build_order();
  }

  IsoResult run() {
    IsoResult result;
    const bool found = extend(0);
    result.nodes = nodes_;
    if (found) {
      result.outcome = IsoOutcome::isomorphic;
      result.witness = PermutationWitness{map_};
    } else {
      result.outcome = exhausted_ ? IsoOutcome::undecided : IsoOutcome::non_isomorphic;
    }
    return result;
  }

 private:
  static constexpr Vertex kUnset = ~Vertex{0};

  // Smallest block first, then the vertex with most already-ordered neighbors.
  void build_order() {
    const std::size_t n = g1_.order();
    std::vector<std::size_t> block_size(n + 1, 0);
    for (auto b : block1_) ++block_size[b];
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t a = 0; a < n; ++a) {
        if (placed[a]) continue;
        if (best == n) {
          best = a;
          continue;
        }
        if (links[a] != links[best]) {
          if (links[a] > links[best]) best = a;
        } else if (block_size[block1_[a]] < block_size[block1_[best]]) {
          best = a;
        }
      }
      placed[best] = true;
      order_.push_back(static_cast<Vertex>(best));
      for (Vertex b : neighborhood(g1_, static_cast<Vertex>(best))) ++links[b];
    }
  }

  bool consistent(std::size_t depth, Vertex u, Vertex w) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x = order_[i];
      if (g1_.adjacent(u, x) != g2_.adjacent(w, map_[x])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    for (Vertex w = 0; w < g2_.order(); ++w) {
      if (used_[w] || block2_[w] != block1_[u]) continue;
      if (g1_.degree(u) != g2_.degree(w)) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      if (!consistent(depth, u, w)) continue;
      map_[u] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[u] = kUnset;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::vector<std::size_t> block1_, block2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex a = 0; a < g.order(); ++a) d[a] = g.degree(a);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::size_t> block_ids(const VertexPartition& p, std::size_t order) {
  std::vector<std::size_t> ids(order, order);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (Vertex v : p.blocks[b]) {
      if (v >= order || ids[v] != order) throw PreconditionError("invalid vertex partition");
      ids[v] = b;
    }
  if (std::find(ids.begin(), ids.end(), order) != ids.end())
    throw PreconditionError("vertex partition does not cover all vertices");
  return ids;
}

}  // namespace

IsoResult are_isomorphic(const Graph& g1, const Graph& g2,
                         const std::optional<std::pair<VertexPartition, VertexPartition>>& blocks,
                         std::uint64_t node_budget) {
  if (g1.order() != g2.order())
    throw PreconditionError("are_isomorphic: graphs have different orders");
  if (degree_sequence(g1) != degree_sequence(g2))
    throw PreconditionError("are_isomorphic: graphs have different degree sequences");

  const std::size_t n = g1.order();
  std::vector<std::size_t> ids1(n, 0), ids2(n, 0);
  if (blocks) {
    const auto& [p1, p2] = *blocks;
    if (p1.blocks.size() != p2.blocks.size()) return {IsoOutcome::non_isomorphic, {}, 0};
    for (std::size_t b = 0; b < p1.blocks.size(); ++b)
      if (p1.blocks[b].size() != p2.blocks[b].size()) return {IsoOutcome::non_isomorphic, {}, 0};
    ids1 = block_ids(p1, n);
    ids2 = block_ids(p2, n);
  }
  if (n == 0) return {IsoOutcome::isomorphic, PermutationWitness{}, 0};
  Matcher matcher(g1, g2, std::move(ids1), std::move(ids2), node_budget);
  return matcher.run();
}

std::pair<Graph, PermutationWitness> random_relabel(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PermutationWitness w;
  w.mapping.resize(g.order());
  for (Vertex a = 0; a < g.order(); ++a) w.mapping[a] = a;
  // Fisher-Yates with rejection sampling; portable across standard libraries.
  for (std::size_t i = g.order(); i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    std::swap(w.mapping[i - 1], w.mapping[r % bound]);
  }
  Graph h = apply_permutation(g, w);
  return {std::move(h), std::move(w)};
}

namespace {

std::uint64_t walks_from(const Graph& g, Vertex at, Vertex target, unsigned remaining,
                         const std::vector<bool>& allowed) {
  if (remaining == 0) return at == target ? 1 : 0;
  std::uint64_t total = 0;
  for (Vertex next : neighborhood(g, at))
    if (allowed[next]) total += walks_from(g, next, target, remaining - 1, allowed);
  return total;
}

}  // namespace

std::uint64_t count_closed_walks(const Graph& g, Vertex start, unsigned length,
                                 std::span<const Vertex> allowed) {
  std::vector<bool> mask(g.order(), false);
  for (Vertex a : allowed) {
    if (a >= g.order()) throw PreconditionError("count_closed_walks: vertex out of range");
    mask[a] = true;
  }
  if (start >= g.order() || !mask[start])
    throw PreconditionError("count_closed_walks: start must be an allowed vertex");
  if (length < 1) throw PreconditionError("count_closed_walks: length must be >= 1");
  return walks_from(g, start, start, length, mask);
}

}  // namespace srginv
