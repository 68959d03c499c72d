#include "srginv/edge_invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "srginv/error.hpp"

namespace srginv {

DirectedEdgeIndex::DirectedEdgeIndex(const Graph& g) {
  pairs_.reserve(2 * g.edge_count());
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : neighborhood(g, a)) pairs_.push_back({a, b});
}

std::optional<std::size_t> DirectedEdgeIndex::find(Vertex tail, Vertex head) const {
  const DirectedEdge key{tail, head};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key);
  if (it == pairs_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

BarMatrix::BarMatrix(const Graph& g) : index_(g), rows_(index_.size()) {
  for (std::size_t i = 0; i < index_.size(); ++i) {
    const auto [a, b] = index_[i];
    const auto na = neighborhood(g, a);
    for (Vertex c : na) {
      // d ranges over N_b ∩ N_c; (c, d) is then an edge automatically
      const auto rb = g.row(b);
      const auto rc = g.row(c);
      for (std::size_t w = 0; w < rb.size(); ++w) {
        for (std::uint64_t bits = rb[w] & rc[w]; bits != 0; bits &= bits - 1) {
          const auto d = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
          rows_[i].push_back(static_cast<std::uint32_t>(*index_.find(c, d)));
        }
      }
    }
    std::sort(rows_[i].begin(), rows_[i].end());
  }
}

bool BarMatrix::entry(std::size_t i, std::size_t j) const {
  return std::binary_search(rows_[i].begin(), rows_[i].end(), static_cast<std::uint32_t>(j));
}

Matrix BarMatrix::dense() const {
  Matrix m(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (auto j : rows_[i]) m(i, j) = 1;
  return m;
}

BarMatrix build_bar_matrix(const Graph& g) { return BarMatrix(g); }

namespace {

// x <- x * bar, using symmetry: (x bar)_j = sum over l in row(j) of x_l.
void step(const BarMatrix& bar, const Ring& ring, const std::vector<std::uint64_t>& x,
          std::vector<std::uint64_t>& y) {
  for (std::size_t j = 0; j < bar.size(); ++j) {
    std::uint64_t s = 0;
    for (auto l : bar.row(j)) s = ring.add(s, x[l]);
    y[j] = s;
  }
}

}  // namespace

std::vector<InvariantVector> bar_power_diagonals(const BarMatrix& bar,
                                                 const std::vector<unsigned>& powers,
                                                 Arithmetic arithmetic) {
  unsigned top = 0;
  for (unsigned p : powers) {
    if (p < 1) throw PreconditionError("bar_power_diagonal requires p >= 1");
    top = std::max(top, p);
  }
  const auto rings = rings_for(arithmetic);
  const std::size_t width = rings.size();
  const std::size_t n = bar.size();
  std::vector<InvariantVector> out(powers.size(), InvariantVector(n * width, 0));
  const unsigned depth = (top + 1) / 2;

  // xs[k] = e_i * bar^k; by symmetry diag_i(bar^p) = xs[p/2] . xs[p - p/2]
  std::vector<std::vector<std::uint64_t>> xs(depth + 1, std::vector<std::uint64_t>(n));
  for (std::size_t r = 0; r < width; ++r) {
    const Ring& ring = rings[r];
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(xs[0].begin(), xs[0].end(), 0);
      xs[0][i] = 1;
      for (unsigned k = 1; k <= depth; ++k) step(bar, ring, xs[k - 1], xs[k]);
      for (std::size_t q = 0; q < powers.size(); ++q) {
        const auto& a = xs[powers[q] / 2];
        const auto& b = xs[powers[q] - powers[q] / 2];
        std::uint64_t value = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (a[j] != 0 && b[j] != 0) value = ring.add(value, ring.mul(a[j], b[j]));
        out[q][i * width + r] = value;
      }
    }
  }
  return out;
}

InvariantVector bar_power_diagonal(const BarMatrix& bar, unsigned p, Arithmetic arithmetic) {
  return std::move(bar_power_diagonals(bar, {p}, arithmetic).front());
}

InvariantVector bar_power_diag(const Graph& g, unsigned p, InvariantMode mode,
                               Arithmetic arithmetic) {
  if (p < 2) throw PreconditionError("edge invariants require p >= 2");
  const BarMatrix bar(g);
  InvariantVector diag = bar_power_diagonal(bar, p, arithmetic);
  const auto rings = rings_for(arithmetic);
  const std::size_t width = rings.size();
  if (mode == InvariantMode::sorted_diag) {
    sort_values(diag, width);
    return diag;
  }
  InvariantVector trace(width, 0);
  for (std::size_t i = 0; i < bar.size(); ++i)
    for (std::size_t r = 0; r < width; ++r) trace[r] = rings[r].add(trace[r], diag[i * width + r]);
  return trace;
}

std::vector<EdgeBlock> edge_partition(const Graph& g, unsigned p, Arithmetic arithmetic) {
  if (p < 2) throw PreconditionError("edge invariants require p >= 2");
  const BarMatrix bar(g);
  const InvariantVector diag = bar_power_diagonal(bar, p, arithmetic);
  const std::size_t width = value_width(arithmetic);
  std::map<InvariantVector, std::vector<DirectedEdge>> groups;
  for (std::size_t i = 0; i < bar.size(); ++i) {
    InvariantVector key(diag.begin() + static_cast<std::ptrdiff_t>(i * width),
                        diag.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
    groups[std::move(key)].push_back(bar.index()[i]);
  }
  std::vector<EdgeBlock> blocks;
  blocks.reserve(groups.size());
  for (auto& [value, edges] : groups) blocks.push_back({value, std::move(edges)});
  return blocks;
}

}  // namespace srginv
