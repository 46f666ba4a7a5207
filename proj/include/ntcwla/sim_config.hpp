#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ntcwla/simulator.hpp"

namespace ntcwla {

// JSON schema is documented in the README. Positions are given in meters by
// default ("units": "m") and converted to cm internally; "units": "cm" takes
// them as-is. Validation failures name the offending field path.
SimConfig parse_sim_config(const nlohmann::json& doc);
SimConfig load_sim_config(const std::filesystem::path& path);

// Applies one `dotted.path=value` assignment to a raw JSON document; the
// value is parsed as JSON when possible and treated as a string otherwise.
void apply_override(nlohmann::json& doc, const std::string& assignment);

// Fitted-parameter file: {"p1": .., "p2": .., "smooth_p1": .., "smooth_p2": ..}
PathLossParams load_params_json(const std::filesystem::path& path);
void write_params_json(const std::filesystem::path& path, const ParamSelection& sel);

// Subset of the simulation config needed to replay recorded packets; the
// trace and channel sections are ignored when present.
struct ReplayConfig {
    std::map<int, Point2D> beacon_positions;
    TestArea area;
    PipelineConfig pipeline;
    LocalizerConfig localizer;
};

ReplayConfig parse_replay_config(const nlohmann::json& doc);
ReplayConfig load_replay_config(const std::filesystem::path& path);

}  // namespace ntcwla
