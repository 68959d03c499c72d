#include "srginv/named_graphs.hpp"

#include <algorithm>
#include <utility>

#include "srginv/error.hpp"

namespace srginv::named {

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle requires n >= 3");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return std::move(b).build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return std::move(b).build();
}

Graph petersen() {
  // Kneser graph K(5,2): 2-subsets adjacent when disjoint.
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  GraphBuilder b(subsets.size());
  for (Vertex x = 0; x < subsets.size(); ++x)
    for (Vertex y = x + 1; y < subsets.size(); ++y) {
      auto [a, c] = subsets[x];
      auto [d, e] = subsets[y];
      if (a != d && a != e && c != d && c != e) b.add_edge(x, y);
    }
  return std::move(b).build();
}

Graph rook(std::size_t n) {
  GraphBuilder b(n * n);
  for (Vertex x = 0; x < n * n; ++x)
    for (Vertex y = x + 1; y < n * n; ++y)
      if (x / n == y / n || x % n == y % n) b.add_edge(x, y);
  return std::move(b).build();
}

Graph shrikhande() {
  // Cayley graph on Z4 x Z4 with connection set {±(0,1), ±(1,0), ±(1,1)}.
  auto in_set = [](int dr, int dc) {
    dr = (dr + 4) % 4;
    dc = (dc + 4) % 4;
    return (dr == 0 && (dc == 1 || dc == 3)) || (dc == 0 && (dr == 1 || dr == 3)) ||
           (dr == 1 && dc == 1) || (dr == 3 && dc == 3);
  };
  GraphBuilder b(16);
  for (Vertex x = 0; x < 16; ++x)
    for (Vertex y = x + 1; y < 16; ++y)
      if (in_set(static_cast<int>(x / 4) - static_cast<int>(y / 4),
                 static_cast<int>(x % 4) - static_cast<int>(y % 4)))
        b.add_edge(x, y);
  return std::move(b).build();
}

Graph paley(std::size_t q) {
  if (q % 4 != 1) throw PreconditionError("paley requires q = 1 mod 4");
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) throw PreconditionError("paley requires a prime order");
  std::vector<bool> square(q, false);
  for (std::size_t x = 1; x < q; ++x) square[x * x % q] = true;
  GraphBuilder b(q);
  for (Vertex x = 0; x < q; ++x)
    for (Vertex y = x + 1; y < q; ++y)
      if (square[(y - x) % q]) b.add_edge(x, y);
  return std::move(b).build();
}

Graph triangular(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  GraphBuilder b(pairs.size());
  for (Vertex x = 0; x < pairs.size(); ++x)
    for (Vertex y = x + 1; y < pairs.size(); ++y) {
      auto [a, c] = pairs[x];
      auto [d, e] = pairs[y];
      if (a == d || a == e || c == d || c == e) b.add_edge(x, y);
    }
  return std::move(b).build();
}

Graph seidel_switch(const Graph& g, std::span<const Vertex> set) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : set) {
    if (v >= g.order()) throw PreconditionError("seidel_switch: vertex out of range");
    in[v] = true;
  }
  GraphBuilder b(g.order());
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (g.adjacent(x, y) != (in[x] != in[y])) b.add_edge(x, y);
  return std::move(b).build();
}

std::vector<Graph> chang_graphs() {
  const Graph t8 = triangular(8);
  auto vertex_of = [](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    // index of pair (i, j) in lexicographic order over 8 points
    std::size_t idx = 0;
    for (std::size_t a = 0; a < i; ++a) idx += 7 - a;
    return static_cast<Vertex>(idx + (j - i - 1));
  };
  const std::vector<std::vector<std::pair<std::size_t, std::size_t>>> switching_sets = {
      {{0, 1}, {2, 3}, {4, 5}, {6, 7}},                                  // perfect matching
      {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}},  // C3 + C5
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}},  // C8
  };
  std::vector<Graph> out;
  for (const auto& edges : switching_sets) {
    std::vector<Vertex> set;
    for (auto [i, j] : edges) set.push_back(vertex_of(i, j));
    out.push_back(seidel_switch(t8, set));
  }
  return out;
}

Graph latin_square_graph(const std::vector<std::vector<int>>& square) {
  const std::size_t n = square.size();
  for (const auto& row : square)
    if (row.size() != n) throw PreconditionError("latin_square_graph: square must be n x n");
  GraphBuilder b(n * n);
  for (Vertex x = 0; x < n * n; ++x)
    for (Vertex y = x + 1; y < n * n; ++y) {
      const auto rx = x / n, cx = x % n, ry = y / n, cy = y % n;
      if (rx == ry || cx == cy || square[rx][cx] == square[ry][cy]) b.add_edge(x, y);
    }
  return std::move(b).build();
}

}  // namespace srginv::named
