#pragma once

#include <filesystem>
#include <vector>

namespace ntcwla {

// One field measurement: RSSI observed at a known distance.
struct CalibrationSample {
    double distance_cm = 0.0;
    double rssi_dbm = 0.0;
};

struct DistanceBin {
    double distance_cm = 0.0;
    double mean_rssi_dbm = 0.0;
    int sample_count = 0;
};

// Least-squares line P = p1 * ln(d) + p2 fitted after smoothing with the
// given window width.
struct FitCandidate {
    int smooth = 1;
    double p1 = 0.0;  // dBm per ln-cm, < 0 for a decaying channel
    double p2 = 0.0;  // dBm
};

struct PathLossParams {
    double p1 = 0.0;  // < 0
    double p2 = 0.0;
};

// Chosen parameters plus the smooth values they came from.
struct ParamSelection {
    PathLossParams params;
    int smooth_p1 = 1;  // smooth of the minimal-p1 candidate
    int smooth_p2 = 1;  // smooth of the maximal-p2 candidate
};

// Reads `distance_cm,rssi_dbm` CSV rows, dropping any sample whose RSSI is
// at or below mr_floor_dbm. If dropped is non-null it receives the number of
// rows removed by the floor.
std::vector<CalibrationSample> load_calibration_csv(const std::filesystem::path& path,
                                                    double mr_floor_dbm,
                                                    int* dropped = nullptr);

// One bin per distinct distance, arithmetic mean RSSI, sorted ascending.
std::vector<DistanceBin> bin_by_distance(const std::vector<CalibrationSample>& samples);

// Centered moving average of width `smooth` (odd) over mean RSSI; the window
// is clipped to the available neighbors at the edges. Distances and sample
// counts are untouched.
std::vector<DistanceBin> smooth_bins(const std::vector<DistanceBin>& bins, int smooth);

FitCandidate fit_candidate(const std::vector<DistanceBin>& bins, int smooth);

// Minimal p1 / maximal p2 rule: if both extremes occur at the same candidate,
// take it; otherwise average the two candidates componentwise. Ties go to the
// smallest smooth.
ParamSelection select_params_detailed(const std::vector<FitCandidate>& candidates);
PathLossParams select_params(const std::vector<FitCandidate>& candidates);

// d = e^((rssi - p2) / p1); strictly decreasing in rssi for p1 < 0.
double rssi_to_distance(const PathLossParams& params, double rssi_dbm);

}  // namespace ntcwla
