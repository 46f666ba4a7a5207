#include "ntcwla/calibration.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "ntcwla/errors.hpp"

namespace ntcwla {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& field, const std::string& file, int line) {
    const std::string t = trim(field);
    double value = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || t.empty()) {
        throw ValidationError(file + ": line " + std::to_string(line) + ": malformed number '" +
                              field + "'");
    }
    return value;
}

}  // namespace

std::vector<CalibrationSample> load_calibration_csv(const std::filesystem::path& path,
                                                    double mr_floor_dbm, int* dropped) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open calibration file: " + path.string());

    const std::string file = path.string();
    std::vector<CalibrationSample> samples;
    int dropped_count = 0;
    std::string line;
    int lineno = 0;
    bool saw_header = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        if (!saw_header) {
            if (trim(line) != "distance_cm,rssi_dbm") {
                throw ValidationError(file + ": line " + std::to_string(lineno) +
                                      ": expected header 'distance_cm,rssi_dbm'");
            }
            saw_header = true;
            continue;
        }

        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw ValidationError(file + ": line " + std::to_string(lineno) +
                                  ": expected 'distance_cm,rssi_dbm'");
        }
        const double dist = parse_double(line.substr(0, comma), file, lineno);
        const double rssi = parse_double(line.substr(comma + 1), file, lineno);
        if (!(dist > 0.0) || !std::isfinite(dist)) {
            throw ValidationError(file + ": line " + std::to_string(lineno) +
                                  ": distance_cm must be positive");
        }
        if (!std::isfinite(rssi)) {
            throw ValidationError(file + ": line " + std::to_string(lineno) +
                                  ": rssi_dbm must be finite");
        }
        if (rssi > mr_floor_dbm) {
            samples.push_back({dist, rssi});
        } else {
            ++dropped_count;
        }
    }

    if (dropped) *dropped = dropped_count;
    if (samples.empty()) {
        throw ValidationError(file + ": empty result (no samples above the " +
                              std::to_string(mr_floor_dbm) + " dBm floor)");
    }
    return samples;
}

std::vector<DistanceBin> bin_by_distance(const std::vector<CalibrationSample>& samples) {
    if (samples.empty()) throw ValidationError("bin_by_distance: empty sample list");

    std::map<double, std::pair<double, int>> acc;  // distance -> (rssi sum, count)
    for (const auto& s : samples) {
        auto& slot = acc[s.distance_cm];
        slot.first += s.rssi_dbm;
        slot.second += 1;
    }

    std::vector<DistanceBin> bins;
    bins.reserve(acc.size());
    for (const auto& [dist, slot] : acc) {
        bins.push_back({dist, slot.first / slot.second, slot.second});
    }
    return bins;
}

std::vector<DistanceBin> smooth_bins(const std::vector<DistanceBin>& bins, int smooth) {
    const int n = static_cast<int>(bins.size());
    if (smooth <= 0 || smooth > n) {
        throw std::invalid_argument("smooth must satisfy 0 < smooth <= " + std::to_string(n));
    }
    if (smooth % 2 == 0) throw std::invalid_argument("smooth must be odd");

    std::vector<DistanceBin> out = bins;
    const int half = (smooth - 1) / 2;
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - half);
        const int hi = std::min(n - 1, i + half);
        double sum = 0.0;
        for (int k = lo; k <= hi; ++k) sum += bins[k].mean_rssi_dbm;
        out[i].mean_rssi_dbm = sum / (hi - lo + 1);
    }
    return out;
}

FitCandidate fit_candidate(const std::vector<DistanceBin>& bins, int smooth) {
    if (bins.size() < 2) throw ValidationError("fit requires at least 2 distance bins");

    const std::vector<DistanceBin> smoothed = smooth_bins(bins, smooth);
    const int n = static_cast<int>(smoothed.size());

    double mx = 0.0, my = 0.0;
    for (const auto& b : smoothed) {
        mx += std::log(b.distance_cm);
        my += b.mean_rssi_dbm;
    }
    mx /= n;
    my /= n;

    double sxx = 0.0, sxy = 0.0;
    for (const auto& b : smoothed) {
        const double dx = std::log(b.distance_cm) - mx;
        sxx += dx * dx;
        sxy += dx * (b.mean_rssi_dbm - my);
    }
    if (sxx <= 0.0) throw ValidationError("fit is degenerate: all distances equal");

    const double p1 = sxy / sxx;
    const double p2 = my - p1 * mx;
    if (!(p1 < 0.0)) {
        throw ValidationError("fitted slope is not negative; data do not show decaying RSSI");
    }
    return {smooth, p1, p2};
}

ParamSelection select_params_detailed(const std::vector<FitCandidate>& candidates) {
    if (candidates.empty()) throw ValidationError("select_params: empty candidate list");

    size_t j = 0;  // minimal p1
    size_t m = 0;  // maximal p2
    for (size_t i = 1; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        if (c.p1 < candidates[j].p1 || (c.p1 == candidates[j].p1 && c.smooth < candidates[j].smooth))
            j = i;
        if (c.p2 > candidates[m].p2 || (c.p2 == candidates[m].p2 && c.smooth < candidates[m].smooth))
            m = i;
    }

    ParamSelection sel;
    sel.smooth_p1 = candidates[j].smooth;
    sel.smooth_p2 = candidates[m].smooth;
    if (j == m) {
        sel.params = {candidates[j].p1, candidates[j].p2};
    } else {
        sel.params = {(candidates[j].p1 + candidates[m].p1) / 2.0,
                      (candidates[j].p2 + candidates[m].p2) / 2.0};
    }
    return sel;
}

PathLossParams select_params(const std::vector<FitCandidate>& candidates) {
    return select_params_detailed(candidates).params;
}

double rssi_to_distance(const PathLossParams& params, double rssi_dbm) {
    if (!(params.p1 < 0.0) || !std::isfinite(params.p1) || !std::isfinite(params.p2)) {
        throw std::invalid_argument("path-loss params require finite p2 and p1 < 0");
    }
    return std::exp((rssi_dbm - params.p2) / params.p1);
}

}  // namespace ntcwla
