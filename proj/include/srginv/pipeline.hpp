#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srginv/graph.hpp"
#include "srginv/matrix.hpp"

namespace srginv {

enum class StageKind { vertex, vertex_outblock, edge };

struct LadderStage {
  StageKind kind = StageKind::vertex;
  InvariantMode mode = InvariantMode::trace;
  std::vector<unsigned> powers;

  /// e.g. "vertex/trace[3,4]".
  std::string label() const;
  bool operator==(const LadderStage&) const = default;
};

struct LadderConfig {
  std::vector<LadderStage> stages;

  /// vertex/trace [3]..[3..9], vertex/sorted_diag [3]..[3..9],
  /// outblock/sorted_diag [3..9], edge/trace [2..5], edge/sorted_diag [2..5].
  static LadderConfig standard();
  /// Throws PreconditionError on an empty ladder, empty or non-ascending
  /// power lists, zero powers, or edge powers below 2.
  void validate() const;
  bool operator==(const LadderConfig&) const = default;
};

struct PipelineOptions {
  Arithmetic arithmetic = Arithmetic::exact;
  unsigned jobs = 1;
  bool early_exit = true;
};

/// Everything a stage contributes for one graph, flattened into one vector
/// with length prefixes so that concatenation stays unambiguous.
InvariantVector stage_signature(const Graph& g, const LadderStage& stage,
                                Arithmetic arithmetic = Arithmetic::exact);

using GraphPair = std::pair<std::size_t, std::size_t>;

struct StageResult {
  LadderStage stage;
  std::size_t classes = 0;
  bool evaluated = false;  // false when skipped by early exit
  std::vector<std::vector<std::size_t>> unresolved_groups;  // classes with >= 2 graphs

  std::uint64_t unresolved_pair_count() const;
  std::vector<GraphPair> unresolved_pairs() const;
};

struct GraphSource {
  std::string file;
  std::size_t index = 0;  // position within the file
};

struct DistinguishReport {
  std::string family;
  std::optional<SrgParams> params;
  std::size_t graph_count = 0;
  std::vector<StageResult> stages;
  std::vector<std::vector<std::size_t>> unresolved_groups;  // after the final stage
  std::vector<std::vector<std::size_t>> edge_stage_groups;  // before the first edge stage
  std::vector<std::size_t> single_block_graphs;
  std::vector<GraphSource> sources;

  std::size_t final_classes() const;
  std::vector<GraphPair> unresolved_pairs() const;
  std::vector<GraphPair> edge_stage_pairs() const;
  std::uint64_t unresolved_pair_count() const;
  std::uint64_t edge_stage_pair_count() const;
  /// Graphs sharing all vertex-stage signatures with another graph of the family.
  std::size_t vertex_identical_graphs() const;
};

/// Groups `graphs` by cumulative stage signatures, stage by stage.
DistinguishReport distinguish_family(const std::vector<Graph>& graphs, const LadderConfig& ladder,
                                     const PipelineOptions& options = {});

struct PairVerdict {
  bool distinguished = false;
  std::size_t stage = 0;  // zero-based index of the first separating stage
  std::string stage_label;
};

/// "distinguished" proves non-isomorphism; the converse does not hold.
PairVerdict compare_pair(const Graph& g1, const Graph& g2, const LadderConfig& ladder,
                         Arithmetic arithmetic = Arithmetic::exact);

struct Family {
  std::string label;
  std::optional<SrgParams> params;
  std::vector<Graph> graphs;
  std::vector<GraphSource> sources;
};

struct Dataset {
  std::vector<Family> families;
  std::size_t graph_count() const;
};

/// Groups graphs into families of equal SRG parameters, ordered by params.
/// Non-SRG graphs throw unless `allow_non_srg`, in which case they are
/// grouped by order under a "<v>-nonsrg" label.
Dataset group_dataset(std::vector<Graph> graphs, std::vector<GraphSource> sources,
                      bool allow_non_srg = false);

/// Reads a file, or every regular non-hidden file of a directory in name order.
Dataset load_dataset(const std::filesystem::path& path, InputFormat format = InputFormat::automatic,
                     bool allow_non_srg = false);

struct DatasetTotals {
  std::size_t graphs = 0;
  std::size_t families = 0;
  std::size_t single_block_graphs = 0;
  std::size_t vertex_identical_graphs = 0;
  std::uint64_t edge_stage_pairs = 0;
  std::uint64_t unresolved_pairs = 0;
};

struct DatasetReport {
  std::vector<DistinguishReport> families;
  DatasetTotals totals;
  Arithmetic arithmetic = Arithmetic::exact;
};

DatasetReport dataset_report(const Dataset& dataset, const LadderConfig& ladder,
                             const PipelineOptions& options = {});

}  // namespace srginv
