#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "srginv/pipeline.hpp"

namespace srginv {

/// Pair lists longer than this are truncated in JSON output; counts are not.
inline constexpr std::size_t kMaxListedPairs = 100000;

nlohmann::json to_json(const LadderStage& stage);
nlohmann::json to_json(const LadderConfig& ladder);
LadderConfig ladder_from_json(const nlohmann::json& j);
/// "default" selects LadderConfig::standard(); anything else is a JSON file.
LadderConfig load_ladder(const std::string& source);

nlohmann::json to_json(const DistinguishReport& report);
nlohmann::json to_json(const DatasetReport& report);

/// Aligned text table: one row per (stage kind, mode), one column per
/// highest power. Cells show class counts only where they change unless
/// `all_stages`; a trailing '*' marks a family fully distinguished.
std::string render_table(const DatasetReport& report, bool all_stages = false);

}  // namespace srginv
