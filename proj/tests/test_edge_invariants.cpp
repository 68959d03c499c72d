#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "srginv/edge_invariants.hpp"
#include "srginv/error.hpp"
#include "srginv/iso_oracle.hpp"
#include "srginv/named_graphs.hpp"

using namespace srginv;

TEST_CASE("directed edge index") {
  const DirectedEdgeIndex idx(named::path(3));
  REQUIRE(idx.size() == 4);
  CHECK(idx[0] == DirectedEdge{0, 1});
  CHECK(idx[1] == DirectedEdge{1, 0});
  CHECK(idx[2] == DirectedEdge{1, 2});
  CHECK(idx[3] == DirectedEdge{2, 1});
  CHECK(idx.find(2, 1) == 3);
  CHECK_FALSE(idx.find(0, 2).has_value());
  CHECK(std::is_sorted(idx.pairs().begin(), idx.pairs().end()));
}

TEST_CASE("bar matrix construction") {
  const BarMatrix k2 = build_bar_matrix(named::complete(2));
  REQUIRE(k2.size() == 2);
  CHECK_FALSE(k2.entry(0, 0));
  CHECK(k2.entry(0, 1));
  CHECK(k2.entry(1, 0));
  CHECK_FALSE(k2.entry(1, 1));

  for (const Graph& g : {named::complete(3), named::star(3)}) {
    const BarMatrix bar(g);
    REQUIRE(bar.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(bar.row(i).size() == 3);
  }

  const BarMatrix none(named::empty_graph(4));
  CHECK(none.empty());
}

TEST_CASE("bar matrix symmetries") {
  for (const auto& fx : oracle::fixtures()) {
    const BarMatrix bar(fx.graph);
    const auto& idx = bar.index();
    for (std::size_t i = 0; i < bar.size(); ++i) {
      CHECK_FALSE(bar.entry(i, i));
      const std::size_t ri = *idx.find(idx[i].head, idx[i].tail);
      for (std::size_t j = 0; j < bar.size(); ++j) {
        const std::size_t rj = *idx.find(idx[j].head, idx[j].tail);
        REQUIRE(bar.entry(i, j) == bar.entry(ri, rj));
        REQUIRE(bar.entry(i, j) == bar.entry(j, i));
      }
    }
  }
}

TEST_CASE("bar power examples") {
  CHECK(bar_power_diag(named::complete(2), 2, InvariantMode::trace) == InvariantVector{2});
  CHECK(bar_power_diag(named::complete(3), 2, InvariantMode::trace) == InvariantVector{18});
  CHECK(bar_power_diag(named::complete(3), 3, InvariantMode::trace) == InvariantVector{12});
  CHECK(bar_power_diag(named::star(3), 2, InvariantMode::trace) == InvariantVector{18});
  CHECK(bar_power_diag(named::star(3), 3, InvariantMode::trace) == InvariantVector{0});

  const auto pet = bar_power_diag(named::petersen(), 2, InvariantMode::sorted_diag);
  CHECK(pet == InvariantVector(30, 5));

  CHECK_THROWS_AS(bar_power_diag(named::petersen(), 1, InvariantMode::trace), PreconditionError);
  CHECK(bar_power_diag(named::empty_graph(3), 2, InvariantMode::trace) == InvariantVector{0});
  CHECK(bar_power_diag(named::empty_graph(3), 2, InvariantMode::sorted_diag).empty());
  // p = 1 diagonal vanishes without self-loops
  CHECK(bar_power_diagonal(BarMatrix(named::petersen()), 1) == InvariantVector(30, 0));
}

TEST_CASE("restricted bar powers agree with the dense v^2 x v^2 construction") {
  std::vector<Graph> graphs = {named::complete(4), named::cycle(5), named::petersen(),
                               named::star(3), named::path(4)};
  for (std::uint64_t seed = 0; seed < 8; ++seed)
    graphs.push_back(oracle::random_graph(5 + seed % 5, 0.5, 40 + seed));
  for (const auto& g : graphs) {
    const std::size_t v = g.order();
    const auto dense = oracle::dense_bar(g);
    const BarMatrix bar(g);
    for (unsigned p = 2; p <= 4; ++p) {
      const auto dp = oracle::naive_power(dense, p);
      const auto diag = bar_power_diagonal(bar, p);
      for (Vertex a = 0; a < v; ++a)
        for (Vertex b = 0; b < v; ++b) {
          const auto d = dp[a * v + b][a * v + b];
          if (auto i = bar.index().find(a, b)) {
            CHECK(diag[*i] == d);
          } else {
            CHECK(d == 0);
          }
        }
      const auto sorted = bar_power_diag(g, p, InvariantMode::sorted_diag);
      const auto trace = bar_power_diag(g, p, InvariantMode::trace);
      CHECK(trace == InvariantVector{std::accumulate(sorted.begin(), sorted.end(), std::uint64_t{0})});
      CHECK(trace[0] == oracle::trace(dp));
    }
  }
}

TEST_CASE("orientation symmetry and permutation invariance of edge diagonals") {
  for (const auto& fx : oracle::fixtures()) {
    const BarMatrix bar(fx.graph);
    for (unsigned p = 2; p <= 5; ++p) {
      const auto diag = bar_power_diagonal(bar, p);
      for (std::size_t i = 0; i < bar.size(); ++i) {
        const auto e = bar.index()[i];
        CHECK(diag[i] == diag[*bar.index().find(e.head, e.tail)]);
      }
      const auto sorted = bar_power_diag(fx.graph, p, InvariantMode::sorted_diag);
      for (std::uint64_t seed = 0; seed < 3; ++seed)
        CHECK(bar_power_diag(random_relabel(fx.graph, seed).first, p, InvariantMode::sorted_diag) ==
              sorted);
    }
  }
}

TEST_CASE("edge partitions") {
  const auto k3 = edge_partition(named::complete(3), 2);
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].edges.size() == 6);
  // edge-transitive graphs cannot split
  for (const Graph& g : {named::petersen(), named::rook(4), named::cycle(7), named::complete(5)})
    for (unsigned p = 2; p <= 5; ++p) CHECK(edge_partition(g, p).size() == 1);

  // path P4: the middle edge differs from the two end edges
  const auto p4 = edge_partition(named::path(4), 2);
  REQUIRE(p4.size() == 2);
  CHECK(p4[0].value < p4[1].value);
  CHECK(p4.front().edges.size() + p4.back().edges.size() == 6);
  CHECK_THROWS_AS(edge_partition(named::path(4), 1), PreconditionError);
}

TEST_CASE("edge invariants in modular mode") {
  const Graph g = named::petersen();
  const auto mod = bar_power_diag(g, 4, InvariantMode::trace, Arithmetic::modular);
  const auto exact = bar_power_diag(g, 4, InvariantMode::trace);
  CHECK(mod == InvariantVector{exact[0] % kModuli[0], exact[0] % kModuli[1]});
  CHECK_THROWS_AS(bar_power_diag(named::complete(8), 30, InvariantMode::trace), OverflowError);
  CHECK_NOTHROW(bar_power_diag(named::complete(8), 30, InvariantMode::trace, Arithmetic::modular));
}
