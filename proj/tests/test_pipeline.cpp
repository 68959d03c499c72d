#include <filesystem>
#include <fstream>
#include <functional>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "srginv/error.hpp"
#include "srginv/iso_oracle.hpp"
#include "srginv/named_graphs.hpp"
#include "srginv/pipeline.hpp"
#include "srginv/report.hpp"

using namespace srginv;

namespace {

LadderConfig trace_ladder(unsigned hi) {
  LadderConfig ladder;
  for (unsigned top = 3; top <= hi; ++top) {
    LadderStage stage{StageKind::vertex, InvariantMode::trace, {}};
    for (unsigned p = 3; p <= top; ++p) stage.powers.push_back(p);
    ladder.stages.push_back(stage);
  }
  return ladder;
}

std::vector<std::vector<std::vector<int>>> reduced_latin_squares(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> sq(n, std::vector<int>(n, -1));
  for (int c = 0; c < n; ++c) sq[0][c] = c;
  for (int r = 0; r < n; ++r) sq[r][0] = r;
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n * n) {
      out.push_back(sq);
      return;
    }
    const int r = cell / n, c = cell % n;
    if (r == 0 || c == 0) return fill(cell + 1);
    for (int s = 0; s < n; ++s) {
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) ok = sq[r][k] != s && sq[k][c] != s;
      if (!ok) continue;
      sq[r][c] = s;
      fill(cell + 1);
      sq[r][c] = -1;
    }
  };
  fill(0);
  return out;
}

std::size_t oracle_classes(const std::vector<Graph>& graphs) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    bool found = false;
    for (std::size_t r : reps) {
      const auto res = are_isomorphic(graphs[i], graphs[r]);
      REQUIRE(res.outcome != IsoOutcome::undecided);
      if (res.outcome == IsoOutcome::isomorphic) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(i);
  }
  return reps.size();
}

}  // namespace

TEST_CASE("standard ladder layout") {
  const auto ladder = LadderConfig::standard();
  REQUIRE(ladder.stages.size() == 17);
  CHECK(ladder.stages.front().label() == "vertex/trace[3]");
  CHECK(ladder.stages[6].label() == "vertex/trace[3,4,5,6,7,8,9]");
  CHECK(ladder.stages[7].label() == "vertex/sorted_diag[3]");
  CHECK(ladder.stages[14].kind == StageKind::vertex_outblock);
  CHECK(ladder.stages[15].label() == "edge/trace[2,3,4,5]");
  CHECK(ladder.stages[16].label() == "edge/sorted_diag[2,3,4,5]");
  CHECK_NOTHROW(ladder.validate());
  CHECK(ladder_from_json(to_json(ladder)) == ladder);
}

TEST_CASE("ladder validation") {
  CHECK_THROWS_AS(LadderConfig{}.validate(), PreconditionError);
  CHECK_THROWS_AS((LadderConfig{{{StageKind::vertex, InvariantMode::trace, {}}}}).validate(),
                  PreconditionError);
  CHECK_THROWS_AS((LadderConfig{{{StageKind::vertex, InvariantMode::trace, {4, 3}}}}).validate(),
                  PreconditionError);
  CHECK_THROWS_AS((LadderConfig{{{StageKind::edge, InvariantMode::trace, {1, 2}}}}).validate(),
                  PreconditionError);
  CHECK_THROWS_AS(ladder_from_json(nlohmann::json::parse(R"({"stages":[{"kind":"x","mode":"trace","powers":[3]}]})")),
                  Error);
  const auto custom = ladder_from_json(nlohmann::json::parse(
      R"({"stages":[{"kind":"vertex","mode":"sortdiag","powers":[3,4]},{"kind":"edge","mode":"trace","powers":[5]}]})"));
  REQUIRE(custom.stages.size() == 2);
  CHECK(custom.stages[0].mode == InvariantMode::sorted_diag);
  CHECK(load_ladder("default") == LadderConfig::standard());
}

TEST_CASE("rook and Shrikhande separate at the first stage") {
  const auto verdict = compare_pair(named::rook(4), named::shrikhande(), LadderConfig::standard());
  CHECK(verdict.distinguished);
  CHECK(verdict.stage == 0);
  CHECK(verdict.stage_label == "vertex/trace[3]");

  const auto family = distinguish_family({named::rook(4), named::shrikhande()}, LadderConfig::standard());
  CHECK(family.stages[0].classes == 2);
  CHECK(family.stages[0].evaluated);
  CHECK_FALSE(family.stages[1].evaluated);
  CHECK(family.final_classes() == 2);
  CHECK(family.unresolved_pairs().empty());
  CHECK(family.edge_stage_pairs().empty());
  CHECK(family.single_block_graphs == std::vector<std::size_t>{0, 1});
}

TEST_CASE("relabeled copies are never distinguished") {
  for (const auto& fx : oracle::fixtures()) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto verdict = compare_pair(fx.graph, random_relabel(fx.graph, seed).first,
                                        LadderConfig::standard());
      CHECK_MESSAGE(!verdict.distinguished, fx.name);
    }
  }
}

TEST_CASE("triangular graph T(8) and the Chang graphs separate at vertex/trace[3]") {
  std::vector<Graph> family = {named::triangular(8)};
  for (auto& g : named::chang_graphs()) family.push_back(g);
  const auto report = distinguish_family(family, trace_ladder(9));
  CHECK(report.stages[0].classes == 4);
  CHECK(report.unresolved_pairs().empty());
}

TEST_CASE("Latin square graphs of order 5: ladder classes equal isomorphism classes") {
  const auto squares = reduced_latin_squares(5);
  REQUIRE(squares.size() == 56);
  std::vector<Graph> graphs;
  for (const auto& sq : squares) {
    graphs.push_back(named::latin_square_graph(sq));
    REQUIRE(check_srg(graphs.back()).params == SrgParams{25, 12, 5, 6});
  }
  PipelineOptions options;
  options.jobs = 4;
  const auto report = distinguish_family(graphs, LadderConfig::standard(), options);
  const auto truth = oracle_classes(graphs);
  CHECK(report.final_classes() == truth);
  // every pair left together is a genuinely isomorphic pair
  for (const auto& group : report.unresolved_groups)
    for (std::size_t i = 1; i < group.size(); ++i)
      CHECK(are_isomorphic(graphs[group[0]], graphs[group[i]]).outcome == IsoOutcome::isomorphic);
}

TEST_CASE("class counts are monotone and unresolved pairs shrink") {
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 0; seed < 30; ++seed) graphs.push_back(oracle::random_graph(9, 0.5, seed % 12));
  for (bool early : {true, false}) {
    PipelineOptions options;
    options.early_exit = early;
    const auto report = distinguish_family(graphs, LadderConfig::standard(), options);
    for (std::size_t s = 1; s < report.stages.size(); ++s) {
      CHECK(report.stages[s].classes >= report.stages[s - 1].classes);
      const auto later = report.stages[s].unresolved_pairs();
      const auto earlier = report.stages[s - 1].unresolved_pairs();
      const std::set<GraphPair> before(earlier.begin(), earlier.end());
      for (const auto& p : later) CHECK(before.count(p) == 1);
    }
  }
}

TEST_CASE("early exit does not change final class counts") {
  std::vector<Graph> graphs = {named::rook(4), named::shrikhande(), named::rook(4)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) graphs.push_back(oracle::random_graph(16, 0.4, seed));
  PipelineOptions with, without;
  without.early_exit = false;
  const auto a = distinguish_family(graphs, LadderConfig::standard(), with);
  const auto b = distinguish_family(graphs, LadderConfig::standard(), without);
  CHECK(a.final_classes() == b.final_classes());
  CHECK(a.unresolved_pairs() == b.unresolved_pairs());
  CHECK(a.unresolved_pairs() == std::vector<GraphPair>{{0, 2}});
  CHECK(a.vertex_identical_graphs() == 2);
  CHECK(a.edge_stage_pairs() == std::vector<GraphPair>{{0, 2}});
}

TEST_CASE("parallel evaluation is deterministic") {
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 0; seed < 40; ++seed) graphs.push_back(oracle::random_graph(12, 0.5, seed % 25));
  Dataset ds = group_dataset(graphs, {}, true);
  PipelineOptions serial, parallel;
  parallel.jobs = 8;
  const auto a = to_json(dataset_report(ds, LadderConfig::standard(), serial)).dump();
  const auto b = to_json(dataset_report(ds, LadderConfig::standard(), parallel)).dump();
  CHECK(a == b);
}

TEST_CASE("dataset grouping and loading") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "srginv_dataset_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream(dir / "a.g6") << to_graph6(named::rook(4)) << "\n" << to_graph6(named::petersen()) << "\n";
    std::ofstream(dir / "b.rows") << "01\n10\n";
    std::ofstream(dir / "c.g6") << to_graph6(named::shrikhande()) << "\n";
    std::ofstream(dir / ".hidden") << "garbage";
  }
  const auto ds = load_dataset(dir);
  REQUIRE(ds.families.size() == 3);
  CHECK(ds.graph_count() == 4);
  CHECK(ds.families[0].label == "2-1-0-?");
  CHECK(ds.families[1].label == "10-3-0-1");
  CHECK(ds.families[2].label == "16-6-2-2");
  CHECK(ds.families[2].graphs.size() == 2);
  CHECK(ds.families[2].sources[1].file == "c.g6");

  const auto report = dataset_report(ds, LadderConfig::standard());
  CHECK(report.totals.graphs == 4);
  CHECK(report.totals.unresolved_pairs == 0);
  const auto json = to_json(report);
  CHECK(json["families"][2]["stages"][0]["classes"] == 2);
  CHECK(json["totals"]["graphs"] == 4);
  CHECK(render_table(report).find("16-6-2-2") != std::string::npos);

  {
    std::ofstream(dir / "d.g6") << to_graph6(named::path(3)) << "\n";
  }
  try {
    load_dataset(dir);
    FAIL("expected a non-SRG rejection");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("d.g6 #0") != std::string::npos);
  }
  CHECK(load_dataset(dir, InputFormat::automatic, true).families.size() == 4);

  std::ofstream(dir / "empty.g6").close();
  CHECK(load_dataset(dir / "empty.g6").families.empty());
  fs::remove_all(dir);
}

TEST_CASE("modular arithmetic in the pipeline") {
  LadderConfig high{{{StageKind::vertex, InvariantMode::trace, {3, 70}}}};
  CHECK_THROWS_AS(compare_pair(named::rook(4), named::shrikhande(), high), OverflowError);
  const auto verdict = compare_pair(named::rook(4), named::shrikhande(), high, Arithmetic::modular);
  CHECK(verdict.distinguished);
  CHECK(verdict.stage == 0);
}
