#include "srginv/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "srginv/error.hpp"

namespace srginv {

using nlohmann::json;

namespace {

const char* kind_key(StageKind k) {
  switch (k) {
    case StageKind::vertex: return "vertex";
    case StageKind::vertex_outblock: return "vertex_outblock";
    case StageKind::edge: return "edge";
  }
  return "?";
}

const char* mode_key(InvariantMode m) { return m == InvariantMode::trace ? "trace" : "sorted_diag"; }

json pairs_json(const std::vector<GraphPair>& pairs, const std::vector<GraphSource>& sources) {
  json out = json::array();
  for (std::size_t i = 0; i < pairs.size() && i < kMaxListedPairs; ++i) {
    const auto [a, b] = pairs[i];
    json entry = {{"a", a}, {"b", b}};
    if (a < sources.size() && b < sources.size() && !sources[a].file.empty()) {
      entry["a_source"] = sources[a].file + "#" + std::to_string(sources[a].index);
      entry["b_source"] = sources[b].file + "#" + std::to_string(sources[b].index);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

json to_json(const LadderStage& stage) {
  return {{"kind", kind_key(stage.kind)}, {"mode", mode_key(stage.mode)}, {"powers", stage.powers}};
}

json to_json(const LadderConfig& ladder) {
  json stages = json::array();
  for (const auto& s : ladder.stages) stages.push_back(to_json(s));
  return {{"stages", stages}};
}

LadderConfig ladder_from_json(const json& j) {
  LadderConfig ladder;
  try {
    for (const auto& s : j.at("stages")) {
      LadderStage stage;
      const auto kind = s.at("kind").get<std::string>();
      if (kind == "vertex") {
        stage.kind = StageKind::vertex;
      } else if (kind == "vertex_outblock" || kind == "outblock") {
        stage.kind = StageKind::vertex_outblock;
      } else if (kind == "edge") {
        stage.kind = StageKind::edge;
      } else {
        throw Error("unknown stage kind '" + kind + "'");
      }
      const auto mode = s.at("mode").get<std::string>();
      if (mode == "trace") {
        stage.mode = InvariantMode::trace;
      } else if (mode == "sorted_diag" || mode == "sortdiag") {
        stage.mode = InvariantMode::sorted_diag;
      } else {
        throw Error("unknown stage mode '" + mode + "'");
      }
      stage.powers = s.at("powers").get<std::vector<unsigned>>();
      ladder.stages.push_back(std::move(stage));
    }
  } catch (const json::exception& e) {
    throw Error(std::string("invalid ladder description: ") + e.what());
  }
  ladder.validate();
  return ladder;
}

LadderConfig load_ladder(const std::string& source) {
  if (source.empty() || source == "default") return LadderConfig::standard();
  std::ifstream in(source);
  if (!in) throw Error("cannot open ladder file " + source);
  try {
    return ladder_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw Error("ladder file " + source + ": " + e.what());
  }
}

json to_json(const DistinguishReport& report) {
  json stages = json::array();
  for (const auto& s : report.stages) {
    json j = to_json(s.stage);
    j["classes"] = s.classes;
    j["evaluated"] = s.evaluated;
    j["unresolved_pair_count"] = s.unresolved_pair_count();
    stages.push_back(std::move(j));
  }
  json out = {
      {"params", report.family},
      {"count", report.graph_count},
      {"stages", stages},
      {"final_classes", report.final_classes()},
      {"unresolved_pair_count", report.unresolved_pair_count()},
      {"unresolved_pairs", pairs_json(report.unresolved_pairs(), report.sources)},
      {"edge_stage_pair_count", report.edge_stage_pair_count()},
      {"edge_stage_pairs", pairs_json(report.edge_stage_pairs(), report.sources)},
      {"single_block_graphs", report.single_block_graphs},
      {"vertex_identical_graphs", report.vertex_identical_graphs()},
  };
  if (report.unresolved_pair_count() > kMaxListedPairs ||
      report.edge_stage_pair_count() > kMaxListedPairs)
    out["pairs_truncated"] = true;
  return out;
}

json to_json(const DatasetReport& report) {
  json families = json::array();
  for (const auto& f : report.families) families.push_back(to_json(f));
  return {
      {"arithmetic", report.arithmetic == Arithmetic::exact ? "exact" : "mod-reduced"},
      {"families", families},
      {"totals",
       {{"graphs", report.totals.graphs},
        {"families", report.totals.families},
        {"single_block_graphs", report.totals.single_block_graphs},
        {"vertex_identical_graphs", report.totals.vertex_identical_graphs},
        {"edge_stage_pairs", report.totals.edge_stage_pairs},
        {"unresolved_pairs", report.totals.unresolved_pairs}}},
  };
}

std::string render_table(const DatasetReport& report, bool all_stages) {
  // Row groups in order of first appearance; columns keyed by highest power.
  std::vector<std::pair<StageKind, InvariantMode>> groups;
  std::set<unsigned> columns;
  for (const auto& f : report.families) {
    for (const auto& s : f.stages) {
      const auto key = std::make_pair(s.stage.kind, s.stage.mode);
      if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
      columns.insert(s.stage.powers.back());
    }
  }

  std::ostringstream out;
  constexpr int kParams = 12, kCount = 8, kStage = 22, kCell = 9, kTail = 14;
  out << std::left << std::setw(kParams) << "params" << std::setw(kCount) << "graphs"
      << std::setw(kStage) << "invariant";
  for (auto c : columns) out << std::setw(kCell) << ("p<=" + std::to_string(c));
  out << std::setw(kTail) << "single-block" << "edge-pairs" << "\n";
  out << std::string(kParams + kCount + kStage + kCell * columns.size() + kTail + 10, '-') << "\n";

  for (const auto& f : report.families) {
    std::map<std::pair<StageKind, InvariantMode>, std::map<unsigned, std::string>> cells;
    std::size_t previous = f.graph_count > 0 ? 1 : 0;
    bool first = true;
    for (const auto& s : f.stages) {
      const bool changed = first || s.classes != previous;
      if (s.evaluated && (all_stages || changed)) {
        std::string cell = std::to_string(s.classes);
        if (s.classes == f.graph_count) cell += "*";
        cells[{s.stage.kind, s.stage.mode}][s.stage.powers.back()] = cell;
      }
      previous = s.classes;
      first = false;
    }
    bool wrote_family = false;
    for (const auto& key : groups) {
      auto it = cells.find(key);
      if (it == cells.end() && !all_stages && wrote_family) continue;
      const std::string label = std::string(key.first == StageKind::vertex ? "vertex"
                                            : key.first == StageKind::edge ? "edge"
                                                                           : "outblock") +
                                "/" + (key.second == InvariantMode::trace ? "trace" : "sort(diag)");
      out << std::setw(kParams) << (wrote_family ? "" : f.family) << std::setw(kCount)
          << (wrote_family ? "" : std::to_string(f.graph_count)) << std::setw(kStage) << label;
      for (auto c : columns) {
        std::string cell;
        if (it != cells.end()) {
          auto ci = it->second.find(c);
          if (ci != it->second.end()) cell = ci->second;
        }
        out << std::setw(kCell) << cell;
      }
      if (!wrote_family) {
        const auto edge_pairs = f.edge_stage_pair_count();
        out << std::setw(kTail) << f.single_block_graphs.size()
            << (edge_pairs == 0 ? std::string("no") : std::to_string(edge_pairs) + " pair(s)");
        if (f.unresolved_pair_count() > 0)
          out << ", " << f.unresolved_pair_count() << " unresolved";
      }
      out << "\n";
      wrote_family = true;
    }
  }
  out << "\ntotal graphs " << report.totals.graphs << ", families " << report.totals.families
      << ", single-block graphs " << report.totals.single_block_graphs
      << ", pairs needing edge stages " << report.totals.edge_stage_pairs << ", unresolved pairs "
      << report.totals.unresolved_pairs;
  if (report.arithmetic == Arithmetic::modular) out << " (mod-reduced)";
  out << "\n";
  return out.str();
}

}  // namespace srginv
