#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ntcwla/localizer.hpp"

namespace ntcwla {

// `seq,beacon_id,rssi_dbm` in arrival order; `seq,PERIOD,-` rows mark period
// boundaries.
struct ReplayPacket {
    long long seq = 0;
    bool period_marker = false;
    int beacon_id = 0;
    double rssi_dbm = 0.0;
};

std::vector<ReplayPacket> parse_replay_csv(const std::filesystem::path& path);

struct ReplayPeriodResult {
    int period = 0;
    int ann = 0;  // beacons used (post-cap); qualifying count when skipped
    std::optional<LocalizationResult> result;
    std::string skip_reason;  // empty when result is set
};

// Feeds the packet stream through the history store and localizes at every
// period boundary. A trailing group of packets with no closing marker is
// localized at end of file.
std::vector<ReplayPeriodResult> run_replay(const std::vector<ReplayPacket>& packets,
                                           const PathLossParams& params,
                                           const std::map<int, Point2D>& beacon_positions,
                                           const TestArea& area, const PipelineConfig& pipeline,
                                           const LocalizerConfig& localizer);

}  // namespace ntcwla
