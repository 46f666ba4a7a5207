#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ntcwla/calibration.hpp"

namespace ntcwla {

struct PipelineConfig {
    int rpn = 5;            // packets kept per beacon
    double mr_dbm = -70.0;  // storage threshold; packets at or below are discarded
    double rr_dbm = -55.0;  // reliability threshold on the weighted current RSSI
    std::optional<int> max_reliable;  // cap on selected beacons, unset = no cap

    void validate() const;  // throws ValidationError
};

// Per-beacon FIFO of the most recent accepted RSSI readings. Single writer;
// histories persist across localization periods.
class RssiHistoryStore {
public:
    RssiHistoryStore(const std::vector<int>& beacon_ids, const PipelineConfig& cfg);

    // Discards rssi <= mr; otherwise appends, shifting out the oldest reading
    // once the FIFO is full. Throws ValidationError for unknown ids.
    void ingest(int beacon_id, double rssi_dbm);

    int beacon_count() const { return static_cast<int>(beacons_.size()); }
    int rpn() const { return rpn_; }
    const std::vector<int>& beacon_ids() const { return ids_; }
    bool full(int beacon_id) const;
    std::span<const double> history(int beacon_id) const;  // oldest first

private:
    struct BeaconHistory {
        std::vector<double> fifo;  // oldest first, size <= rpn
        bool full = false;
    };

    const BeaconHistory& at(int beacon_id) const;

    int rpn_;
    double mr_dbm_;
    std::vector<int> ids_;  // registration order == discovery order
    std::vector<BeaconHistory> beacons_;
    std::unordered_map<int, int> index_;
};

// Weighted average of a full history: the oldest reading gets 1/2^(rpn-1),
// reading j (1-based from the second) gets 1/2^(rpn-j); weights sum to 1 and
// the newest reading carries 1/2.
double current_rssi(std::span<const double> history, int rpn);

struct ReliableBeacon {
    int beacon_index = 0;
    double measured_distance_cm = 0.0;
    double current_rssi_dbm = 0.0;
};

// Beacons with a full history whose current RSSI strictly exceeds rr, capped
// to the max_reliable strongest when set; output in discovery order.
std::vector<ReliableBeacon> select_reliable(const RssiHistoryStore& store,
                                            const PathLossParams& params,
                                            const PipelineConfig& cfg);

// Number of beacons that qualify before any cap is applied.
int count_reliable(const RssiHistoryStore& store, const PipelineConfig& cfg);

}  // namespace ntcwla
