#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ntcwla/geometry.hpp"
#include "ntcwla/rssi_pipeline.hpp"

namespace ntcwla {

struct LocalizerConfig {
    double filter_threshold_cm = 20.0;
    int min_reliable = 3;

    void validate() const;
};

struct LocalizationResult {
    Point2D estimate;
    int n_triples = 0;      // C(ann, 3)
    int n_references = 0;   // triples that produced a reference coordinate
    int n_after_filter = 0; // references surviving the deviation filter
    std::vector<int> beacons_used;
    std::vector<ReferenceCoordinate> references;  // diagnostic, pre-filter
};

// weight_i = (1/mr_i) / sum_k (1/mr_k); sums to 1, smaller mr weighs more.
std::vector<double> reference_weights(const std::vector<ReferenceCoordinate>& refs);

// Componentwise weighted sum. Weights must match refs in length and sum to 1
// within 1e-12.
Point2D weighted_position(const std::vector<ReferenceCoordinate>& refs,
                          const std::vector<double>& weights);

// Keeps references within threshold_cm of the anchor. If that would drop
// everything, the single closest reference is kept instead so the period
// still produces an estimate.
std::vector<ReferenceCoordinate> filter_references(const std::vector<ReferenceCoordinate>& refs,
                                                   Point2D anchor, double threshold_cm);

// Full pass: every 3-combination of the reliable beacons (lexicographic index
// order) contributes a reference coordinate, the references are fused with
// reciprocal-mr weights, filtered against that first estimate, and fused
// again. Returns nothing when fewer than cfg.min_reliable beacons are given
// or when no triple produces a reference.
std::optional<LocalizationResult> localize(const std::vector<ReliableBeacon>& reliable,
                                           const std::map<int, Point2D>& beacon_positions,
                                           const TestArea& area, const LocalizerConfig& cfg);

}  // namespace ntcwla
