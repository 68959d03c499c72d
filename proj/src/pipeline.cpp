#include "srginv/pipeline.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "srginv/edge_invariants.hpp"
#include "srginv/error.hpp"
#include "srginv/parallel.hpp"
#include "srginv/vertex_invariants.hpp"

namespace srginv {

namespace {

const char* kind_name(StageKind kind) {
  switch (kind) {
    case StageKind::vertex: return "vertex";
    case StageKind::vertex_outblock: return "outblock";
    case StageKind::edge: return "edge";
  }
  return "?";
}

std::vector<unsigned> power_range(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

void append_prefixed(InvariantVector& out, const InvariantVector& part) {
  out.push_back(part.size());
  out.insert(out.end(), part.begin(), part.end());
}

void append_signature(InvariantVector& out, const GraphSignature& sig) {
  out.push_back(sig.rows.size());
  for (const auto& row : sig.rows) append_prefixed(out, row);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct ClassKey {
  std::size_t previous = 0;
  InvariantVector signature;
  bool operator==(const ClassKey&) const = default;
};

struct ClassKeyHash {
  std::size_t operator()(const ClassKey& key) const {
    std::uint64_t h = splitmix(key.previous);
    for (auto x : key.signature) h = splitmix(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::vector<std::size_t>> groups_of(const std::vector<std::size_t>& class_of,
                                                std::size_t classes) {
  std::vector<std::vector<std::size_t>> members(classes);
  for (std::size_t i = 0; i < class_of.size(); ++i) members[class_of[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& m : members)
    if (m.size() >= 2) out.push_back(std::move(m));
  return out;
}

std::uint64_t pair_count(const std::vector<std::vector<std::size_t>>& groups) {
  std::uint64_t total = 0;
  for (const auto& g : groups) total += g.size() * (g.size() - 1) / 2;
  return total;
}

std::vector<GraphPair> pairs_of(const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<GraphPair> out;
  for (const auto& g : groups)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) out.emplace_back(g[i], g[j]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string LadderStage::label() const {
  std::string s = std::string(kind_name(kind)) + "/" +
                  (mode == InvariantMode::trace ? "trace" : "sorted_diag") + "[";
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(powers[i]);
  }
  return s + "]";
}

LadderConfig LadderConfig::standard() {
  LadderConfig ladder;
  for (auto mode : {InvariantMode::trace, InvariantMode::sorted_diag})
    for (unsigned hi = 3; hi <= 9; ++hi)
      ladder.stages.push_back({StageKind::vertex, mode, power_range(3, hi)});
  ladder.stages.push_back({StageKind::vertex_outblock, InvariantMode::sorted_diag, power_range(3, 9)});
  ladder.stages.push_back({StageKind::edge, InvariantMode::trace, power_range(2, 5)});
  ladder.stages.push_back({StageKind::edge, InvariantMode::sorted_diag, power_range(2, 5)});
  return ladder;
}

void LadderConfig::validate() const {
  if (stages.empty()) throw PreconditionError("ladder has no stages");
  for (const auto& stage : stages) {
    if (stage.powers.empty()) throw PreconditionError("stage " + stage.label() + " has no powers");
    for (std::size_t i = 0; i < stage.powers.size(); ++i) {
      if (stage.powers[i] == 0)
        throw PreconditionError("stage " + stage.label() + ": powers must be positive");
      if (i > 0 && stage.powers[i] <= stage.powers[i - 1])
        throw PreconditionError("stage " + stage.label() + ": powers must be ascending");
    }
    if (stage.kind == StageKind::edge && stage.powers.front() < 2)
      throw PreconditionError("stage " + stage.label() + ": edge powers must be >= 2");
  }
}

InvariantVector stage_signature(const Graph& g, const LadderStage& stage, Arithmetic arithmetic) {
  InvariantVector out;
  switch (stage.kind) {
    case StageKind::vertex:
      append_signature(out, graph_signature(g, stage.powers, stage.mode, arithmetic));
      break;
    case StageKind::vertex_outblock: {
      const auto sig = outblock_signature(g, stage.powers, stage.mode, arithmetic);
      out.push_back(sig.refined ? 1 : 0);
      append_signature(out, sig.base);
      append_signature(out, sig.remainder);
      break;
    }
    case StageKind::edge: {
      const BarMatrix bar(g);
      const auto rings = rings_for(arithmetic);
      const std::size_t width = rings.size();
      auto diags = bar_power_diagonals(bar, stage.powers, arithmetic);
      for (auto& diag : diags) {
        if (stage.mode == InvariantMode::sorted_diag) {
          sort_values(diag, width);
          append_prefixed(out, diag);
        } else {
          InvariantVector trace(width, 0);
          for (std::size_t i = 0; i < bar.size(); ++i)
            for (std::size_t r = 0; r < width; ++r)
              trace[r] = rings[r].add(trace[r], diag[i * width + r]);
          append_prefixed(out, trace);
        }
      }
      break;
    }
  }
  return out;
}

std::uint64_t StageResult::unresolved_pair_count() const { return pair_count(unresolved_groups); }

std::vector<GraphPair> StageResult::unresolved_pairs() const { return pairs_of(unresolved_groups); }

std::vector<GraphPair> DistinguishReport::unresolved_pairs() const {
  return pairs_of(unresolved_groups);
}
std::vector<GraphPair> DistinguishReport::edge_stage_pairs() const {
  return pairs_of(edge_stage_groups);
}
std::uint64_t DistinguishReport::unresolved_pair_count() const {
  return pair_count(unresolved_groups);
}
std::uint64_t DistinguishReport::edge_stage_pair_count() const {
  return pair_count(edge_stage_groups);
}

std::size_t DistinguishReport::vertex_identical_graphs() const {
  std::size_t n = 0;
  for (const auto& group : edge_stage_groups) n += group.size();
  return n;
}

std::size_t DistinguishReport::final_classes() const {
  return stages.empty() ? (graph_count > 0 ? 1 : 0) : stages.back().classes;
}

DistinguishReport distinguish_family(const std::vector<Graph>& graphs, const LadderConfig& ladder,
                                     const PipelineOptions& options) {
  ladder.validate();
  DistinguishReport report;
  report.graph_count = graphs.size();
  const std::size_t n = graphs.size();

  std::vector<std::size_t> class_of(n, 0);
  std::size_t classes = n > 0 ? 1 : 0;
  std::vector<std::vector<std::size_t>> groups = groups_of(class_of, classes);
  std::vector<std::size_t> class_size(classes, n);
  bool edge_pairs_recorded = false;

  for (const auto& stage : ladder.stages) {
    if (stage.kind == StageKind::edge && !edge_pairs_recorded) {
      report.edge_stage_groups = groups;
      edge_pairs_recorded = true;
    }
    StageResult result{stage, classes, false, groups};
    if (options.early_exit && classes == n) {
      report.stages.push_back(std::move(result));
      continue;
    }

    // Graphs alone in their class stay alone; only the rest need the stage.
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < n; ++i)
      if (class_size[class_of[i]] > 1) pending.push_back(i);
    std::vector<InvariantVector> sigs(n);
    parallel_for(pending.size(), options.jobs, [&](std::size_t t) {
      const std::size_t i = pending[t];
      sigs[i] = stage_signature(graphs[i], stage, options.arithmetic);
    });

    std::unordered_map<ClassKey, std::size_t, ClassKeyHash> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      ClassKey key{class_of[i], std::move(sigs[i])};
      auto [it, inserted] = ids.try_emplace(std::move(key), ids.size());
      next[i] = it->second;
    }
    class_of = std::move(next);
    classes = ids.size();
    class_size.assign(classes, 0);
    for (auto c : class_of) ++class_size[c];
    groups = groups_of(class_of, classes);

    result.classes = classes;
    result.evaluated = true;
    result.unresolved_groups = groups;
    report.stages.push_back(std::move(result));
  }
  if (!edge_pairs_recorded) report.edge_stage_groups = groups;
  report.unresolved_groups = groups;

  // Vertex-blocking diagnostic under the strongest vertex stage of the ladder.
  LadderStage strongest{StageKind::vertex, InvariantMode::sorted_diag, {3}};
  for (const auto& stage : ladder.stages)
    if (stage.kind != StageKind::edge) strongest = stage;
  std::vector<char> single(n, 0);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    const auto sigs = vertex_signatures(graphs[i], strongest.powers, strongest.mode,
                                        options.arithmetic);
    single[i] = graphs[i].order() > 0 && partition_vertices(sigs).single_block() ? 1 : 0;
  });
  for (std::size_t i = 0; i < n; ++i)
    if (single[i]) report.single_block_graphs.push_back(i);
  return report;
}

PairVerdict compare_pair(const Graph& g1, const Graph& g2, const LadderConfig& ladder,
                         Arithmetic arithmetic) {
  ladder.validate();
  if (g1.order() != g2.order())
    throw PreconditionError("compare_pair: graphs have different orders");
  for (std::size_t s = 0; s < ladder.stages.size(); ++s) {
    const auto& stage = ladder.stages[s];
    if (stage_signature(g1, stage, arithmetic) != stage_signature(g2, stage, arithmetic))
      return {true, s, stage.label()};
  }
  return {};
}

std::size_t Dataset::graph_count() const {
  std::size_t total = 0;
  for (const auto& f : families) total += f.graphs.size();
  return total;
}

Dataset group_dataset(std::vector<Graph> graphs, std::vector<GraphSource> sources,
                      bool allow_non_srg) {
  if (sources.size() != graphs.size()) {
    sources.clear();
    for (std::size_t i = 0; i < graphs.size(); ++i) sources.push_back({"", i});
  }
  struct Key {
    bool srg;
    SrgParams params;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, Family> families;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    SrgCheck check;
    if (graphs[i].order() >= 2) {
      check = check_srg(graphs[i]);
    } else {
      check.reason = "fewer than 2 vertices";
    }
    Key key;
    if (check) {
      key = {true, *check.params};
    } else if (allow_non_srg) {
      key = {false, SrgParams{static_cast<std::uint32_t>(graphs[i].order()), 0, {}, {}}};
    } else {
      const auto& src = sources[i];
      throw Error("graph " + std::to_string(i) +
                  (src.file.empty() ? "" : " (" + src.file + " #" + std::to_string(src.index) + ")") +
                  " is not an SRG: " + check.reason);
    }
    auto& family = families[key];
    if (family.graphs.empty()) {
      family.params = check.params;
      family.label = check ? check.params->label() : std::to_string(graphs[i].order()) + "-nonsrg";
    }
    family.graphs.push_back(std::move(graphs[i]));
    family.sources.push_back(sources[i]);
  }
  Dataset dataset;
  for (auto& [key, family] : families) dataset.families.push_back(std::move(family));
  return dataset;
}

Dataset load_dataset(const std::filesystem::path& path, InputFormat format, bool allow_non_srg) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(path)) {
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (!entry.is_regular_file()) continue;
      if (entry.path().filename().string().starts_with(".")) continue;
      files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<Graph> graphs;
  std::vector<GraphSource> sources;
  for (const auto& file : files) {
    auto parsed = read_graphs(file, format);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      graphs.push_back(std::move(parsed[i]));
      sources.push_back({file.filename().string(), i});
    }
  }
  return group_dataset(std::move(graphs), std::move(sources), allow_non_srg);
}

DatasetReport dataset_report(const Dataset& dataset, const LadderConfig& ladder,
                             const PipelineOptions& options) {
  DatasetReport report;
  report.arithmetic = options.arithmetic;
  for (const auto& family : dataset.families) {
    auto r = distinguish_family(family.graphs, ladder, options);
    r.family = family.label;
    r.params = family.params;
    r.sources = family.sources;
    report.totals.graphs += r.graph_count;
    report.totals.single_block_graphs += r.single_block_graphs.size();
    report.totals.vertex_identical_graphs += r.vertex_identical_graphs();
    report.totals.edge_stage_pairs += r.edge_stage_pair_count();
    report.totals.unresolved_pairs += r.unresolved_pair_count();
    report.families.push_back(std::move(r));
  }
  report.totals.families = report.families.size();
  return report;
}

}  // namespace srginv
