#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ntcwla/geometry.hpp"
#include "ntcwla/localizer.hpp"
#include "ntcwla/period.hpp"
#include "ntcwla/rssi_pipeline.hpp"

namespace ntcwla {

// Log-distance channel: rssi = p_d0 - 10*eta*log10(d/d0) - zeta - noise,
// with zeta ~ N(zeta_mean, zeta_std) and noise ~ N(0, noise_std) drawn per
// packet. Zero stds make the draws collapse to their means.
struct ChannelModel {
    double d0_cm = 100.0;
    double p_d0_dbm = -40.0;
    double eta = 2.0;
    double zeta_mean_dbm = 0.0;
    double zeta_std_dbm = 0.0;
    double noise_std_dbm = 0.0;

    void validate() const;
};

struct TraceSpec {
    enum class Kind { LinearDiagonal, SquarePerimeter, Waypoints };

    Kind kind = Kind::LinearDiagonal;
    std::vector<Point2D> waypoints;  // cm; >= 2 points, closed for loops > 1
    double speed_cm_per_s = 1.0;
    int loops = 1;
    std::optional<double> duration_s;  // default: time to traverse the path

    void validate(const TestArea& area) const;
    double total_length_cm() const;
    double duration() const;  // seconds actually simulated
};

// Position after t seconds of constant-speed travel along the polyline,
// clamped at the final waypoint.
Point2D trace_position(const TraceSpec& trace, double t_s);

struct SimConfig {
    std::vector<std::pair<int, Point2D>> beacons;  // (id, position cm)
    TestArea area;
    ChannelModel channel;
    TraceSpec trace;
    PipelineConfig pipeline;
    LocalizerConfig localizer;
    PeriodConfig period;
    int packets_per_beacon_per_period = 5;
    std::uint64_t rng_seed = 1;
    std::optional<int> n_cap;                 // overrides pipeline.max_reliable
    std::optional<PathLossParams> params;     // default: analytic from channel
    std::vector<int> n_sweep;                 // used by the CLI, not run_trace

    void validate() const;
};

// Exact inverse of the noiseless channel: p1 = -10*eta/ln(10),
// p2 = p_d0 + 10*eta*log10(d0).
PathLossParams analytic_params(const ChannelModel& channel);

double generate_rssi(double distance_cm, const ChannelModel& channel, std::mt19937_64& rng);

struct StepRecord {
    double time_s = 0.0;
    Point2D true_position;
    std::optional<Point2D> estimate;
    std::optional<double> error_cm;
    int ann = 0;        // beacons actually used (post-cap)
    int n_triples = 0;
};

struct Summary {
    double mean_cm = 0.0;
    double rmse_cm = 0.0;
    double max_cm = 0.0;
    int skipped = 0;
    int estimated = 0;
    int steps = 0;
};

// One period-controller checkpoint: counters observed at the check and the
// period that resulted from it.
struct PeriodCheck {
    int check_index = 0;
    long long period_ms = 0;
    int m_count = 0;
    int n_count = 0;
};

struct TraceResult {
    std::vector<StepRecord> steps;
    Summary summary;
    std::vector<PeriodCheck> period_checks;
};

// Drives the full pipeline along the trace: per period the node advances,
// every beacon emits packets at the new position, reliable beacons are
// selected (capped at n_cap) and localized, and the period controller is fed
// the uncapped qualifying count. Deterministic for a fixed config.
TraceResult run_trace(const SimConfig& cfg);

// Statistics over steps that produced an estimate. Throws when none did.
Summary error_stats(const std::vector<StepRecord>& records);

// Like error_stats but tolerates an all-skipped record list (stats stay 0,
// estimated == 0); what run_trace and the report command use.
Summary summarize_steps(const std::vector<StepRecord>& records);

}  // namespace ntcwla
