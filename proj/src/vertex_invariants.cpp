#include "srginv/vertex_invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "srginv/error.hpp"

namespace srginv {

InvariantVector nbhd_power_diag(const Graph& g, Vertex a, unsigned p, InvariantMode mode,
                                Arithmetic arithmetic) {
  if (p < 1) throw PreconditionError("nbhd_power_diag requires p >= 1");
  const auto nbhd = neighborhood(g, a);
  const std::size_t d = nbhd.size();
  Matrix restricted(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) restricted(i, j) = g.adjacent(nbhd[i], nbhd[j]) ? 1 : 0;

  const auto rings = rings_for(arithmetic);
  const std::size_t width = rings.size();
  InvariantVector out(mode == InvariantMode::trace ? width : d * width);
  for (std::size_t r = 0; r < width; ++r) {
    const Matrix m = power(restricted, p, rings[r]);
    if (mode == InvariantMode::trace) {
      out[r] = m.trace(rings[r]);
    } else {
      for (std::size_t i = 0; i < d; ++i) out[i * width + r] = m(i, i);
    }
  }
  if (mode == InvariantMode::sorted_diag) sort_values(out, width);
  return out;
}

bool signature_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<VertexSignature> vertex_signatures(const Graph& g, std::span<const unsigned> powers,
                                               InvariantMode mode, Arithmetic arithmetic) {
  if (powers.empty()) throw PreconditionError("vertex_signatures requires a nonempty power list");
  std::vector<VertexSignature> out(g.order());
  for (Vertex a = 0; a < g.order(); ++a) {
    out[a].vertex = a;
    for (unsigned p : powers) {
      const auto part = nbhd_power_diag(g, a, p, mode, arithmetic);
      out[a].values.insert(out[a].values.end(), part.begin(), part.end());
    }
  }
  return out;
}

GraphSignature graph_signature(std::span<const VertexSignature> signatures) {
  GraphSignature sig;
  sig.rows.reserve(signatures.size());
  for (const auto& s : signatures) sig.rows.push_back(s.values);
  std::sort(sig.rows.begin(), sig.rows.end(),
            [](const auto& x, const auto& y) { return signature_less(x, y); });
  return sig;
}

GraphSignature graph_signature(const Graph& g, std::span<const unsigned> powers,
                               InvariantMode mode, Arithmetic arithmetic) {
  const auto sigs = vertex_signatures(g, powers, mode, arithmetic);
  return graph_signature(sigs);
}

bool VertexPartition::discrete() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

VertexPartition partition_vertices(std::span<const VertexSignature> signatures) {
  std::vector<std::size_t> order(signatures.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (signatures[x].values != signatures[y].values)
      return signature_less(signatures[x].values, signatures[y].values);
    return signatures[x].vertex < signatures[y].vertex;
  });
  VertexPartition partition;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || signatures[order[i]].values != signatures[order[i - 1]].values)
      partition.blocks.emplace_back();
    partition.blocks.back().push_back(signatures[order[i]].vertex);
  }
  return partition;
}

bool refines(const VertexPartition& partition, const VertexPartition& coarse) {
  std::map<Vertex, std::size_t> owner;
  for (std::size_t b = 0; b < coarse.blocks.size(); ++b)
    for (Vertex v : coarse.blocks[b]) owner[v] = b;
  for (const auto& block : partition.blocks) {
    for (Vertex v : block) {
      auto it = owner.find(v);
      if (it == owner.end() || it->second != owner.at(block.front())) return false;
    }
  }
  return true;
}

OutblockSignature outblock_signature(const Graph& g, std::span<const unsigned> powers,
                                     InvariantMode mode, Arithmetic arithmetic) {
  OutblockSignature out;
  const auto sigs = vertex_signatures(g, powers, mode, arithmetic);
  out.base = graph_signature(sigs);
  const auto partition = partition_vertices(sigs);
  if (partition.blocks.size() < 2) return out;

  out.refined = true;
  out.removed = partition.blocks.front();
  std::vector<Vertex> rest;
  for (Vertex a = 0; a < g.order(); ++a)
    if (!std::binary_search(out.removed.begin(), out.removed.end(), a)) rest.push_back(a);
  const Graph sub = induced_subgraph(g, rest);
  out.remainder = graph_signature(sub, powers, mode, arithmetic);
  return out;
}

}  // namespace srginv
