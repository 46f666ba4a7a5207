#include "ntcwla/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ntcwla/errors.hpp"

namespace ntcwla {

void ChannelModel::validate() const {
    if (!(d0_cm > 0.0)) throw ValidationError("channel.d0_cm must be > 0");
    if (!(eta > 0.0)) throw ValidationError("channel.eta must be > 0");
    if (zeta_std_dbm < 0.0 || noise_std_dbm < 0.0) {
        throw ValidationError("channel std deviations must be >= 0");
    }
}

void TraceSpec::validate(const TestArea& area) const {
    if (waypoints.size() < 2) throw ValidationError("trace needs at least 2 waypoints");
    if (!(speed_cm_per_s > 0.0)) throw ValidationError("trace.speed_cm_per_s must be > 0");
    if (loops < 1) throw ValidationError("trace.loops must be >= 1");
    for (size_t i = 0; i < waypoints.size(); ++i) {
        if (!area.contains(waypoints[i])) {
            throw ValidationError("trace.waypoints[" + std::to_string(i) +
                                  "] lies outside the test area");
        }
    }
    if (loops > 1 && !(waypoints.front() == waypoints.back())) {
        throw ValidationError("looping traces must be closed (first waypoint == last)");
    }
    if (!(total_length_cm() > 0.0)) throw ValidationError("trace has zero length");
    if (duration_s && !(*duration_s > 0.0)) throw ValidationError("trace.duration_s must be > 0");
}

double TraceSpec::total_length_cm() const {
    double len = 0.0;
    for (size_t i = 1; i < waypoints.size(); ++i) {
        len += distance(waypoints[i - 1], waypoints[i]);
    }
    return len;
}

double TraceSpec::duration() const {
    if (duration_s) return *duration_s;
    return total_length_cm() * loops / speed_cm_per_s;
}

Point2D trace_position(const TraceSpec& trace, double t_s) {
    const double lap = trace.total_length_cm();
    double s = trace.speed_cm_per_s * std::max(0.0, t_s);
    const double full = lap * trace.loops;
    if (s >= full) return trace.waypoints.back();
    s = std::fmod(s, lap);

    for (size_t i = 1; i < trace.waypoints.size(); ++i) {
        const Point2D a = trace.waypoints[i - 1];
        const Point2D b = trace.waypoints[i];
        const double seg = distance(a, b);
        if (s <= seg) {
            if (seg == 0.0) return a;
            const double f = s / seg;
            return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
        }
        s -= seg;
    }
    return trace.waypoints.back();
}

void SimConfig::validate() const {
    if (beacons.size() < 3) throw ValidationError("config needs at least 3 beacons");
    for (size_t i = 0; i < beacons.size(); ++i) {
        for (size_t j = i + 1; j < beacons.size(); ++j) {
            if (beacons[i].first == beacons[j].first) {
                throw ValidationError("beacons: duplicate id " + std::to_string(beacons[i].first));
            }
            if (beacons[i].second == beacons[j].second) {
                throw ValidationError("beacons: positions must be distinct");
            }
        }
    }
    if (!(area.min.x < area.max.x) || !(area.min.y < area.max.y)) {
        throw ValidationError("area.min must be componentwise below area.max");
    }
    channel.validate();
    trace.validate(area);
    pipeline.validate();
    localizer.validate();
    period.validate();
    if (packets_per_beacon_per_period < 1) {
        throw ValidationError("packets_per_beacon_per_period must be >= 1");
    }
    if (n_cap && *n_cap < 1) throw ValidationError("n_cap must be >= 1 when set");
    if (params && !(params->p1 < 0.0)) throw ValidationError("params.p1 must be < 0");
    for (int n : n_sweep) {
        if (n < 1) throw ValidationError("n_sweep entries must be >= 1");
    }
}

PathLossParams analytic_params(const ChannelModel& channel) {
    channel.validate();
    const double p1 = -10.0 * channel.eta / std::log(10.0);
    const double p2 = channel.p_d0_dbm + 10.0 * channel.eta * std::log10(channel.d0_cm);
    return {p1, p2};
}

double generate_rssi(double distance_cm, const ChannelModel& channel, std::mt19937_64& rng) {
    if (!(distance_cm > 0.0)) throw std::invalid_argument("distance must be > 0");
    double rssi = channel.p_d0_dbm - 10.0 * channel.eta * std::log10(distance_cm / channel.d0_cm);
    double zeta = channel.zeta_mean_dbm;
    if (channel.zeta_std_dbm > 0.0) {
        zeta = std::normal_distribution<double>(channel.zeta_mean_dbm, channel.zeta_std_dbm)(rng);
    }
    double noise = 0.0;
    if (channel.noise_std_dbm > 0.0) {
        noise = std::normal_distribution<double>(0.0, channel.noise_std_dbm)(rng);
    }
    return rssi - zeta - noise;
}

TraceResult run_trace(const SimConfig& cfg) {
    cfg.validate();

    PipelineConfig pipeline = cfg.pipeline;
    if (cfg.n_cap) pipeline.max_reliable = *cfg.n_cap;
    const PathLossParams params = cfg.params ? *cfg.params : analytic_params(cfg.channel);

    std::vector<int> ids;
    std::map<int, Point2D> positions;
    for (const auto& [id, pos] : cfg.beacons) {
        ids.push_back(id);
        positions.emplace(id, pos);
    }

    RssiHistoryStore store(ids, pipeline);
    PeriodState state = initial_state(cfg.period);
    std::mt19937_64 rng(cfg.rng_seed);

    TraceResult out;
    const double duration = cfg.trace.duration();
    int check_index = 0;
    double t = 0.0;

    for (;;) {
        const double period_s = std::chrono::duration<double>(state.period).count();
        const double t_next = t + period_s;
        if (t_next > duration + 1e-9) break;
        t = t_next;

        const Point2D pos = trace_position(cfg.trace, t);
        for (int id : ids) {
            const double d = distance(pos, positions.at(id));
            for (int p = 0; p < cfg.packets_per_beacon_per_period; ++p) {
                store.ingest(id, generate_rssi(d, cfg.channel, rng));
            }
        }

        const std::vector<ReliableBeacon> reliable = select_reliable(store, params, pipeline);
        const int am = count_reliable(store, pipeline);

        StepRecord step;
        step.time_s = t;
        step.true_position = pos;
        step.ann = static_cast<int>(reliable.size());
        if (static_cast<int>(reliable.size()) >= cfg.localizer.min_reliable) {
            if (auto res = localize(reliable, positions, cfg.area, cfg.localizer)) {
                step.estimate = res->estimate;
                step.error_cm = distance(pos, res->estimate);
                step.n_triples = res->n_triples;
            } else {
                step.n_triples = step.ann * (step.ann - 1) * (step.ann - 2) / 6;
            }
        }
        out.steps.push_back(step);

        state = record_period(state, am, cfg.period);
        if (state.periods_seen >= cfg.period.check_every) {
            const int m = state.m_count;
            const int n = state.n_count;
            state = adjust(state, cfg.period);
            out.period_checks.push_back({check_index++, state.period.count(), m, n});
        }
    }

    out.summary = summarize_steps(out.steps);
    return out;
}

Summary summarize_steps(const std::vector<StepRecord>& records) {
    bool any = false;
    for (const auto& r : records) any = any || r.estimate.has_value();
    if (any) return error_stats(records);
    Summary s;
    s.steps = static_cast<int>(records.size());
    s.skipped = s.steps;
    return s;
}

Summary error_stats(const std::vector<StepRecord>& records) {
    if (records.empty()) throw std::invalid_argument("error_stats: no records");

    Summary s;
    s.steps = static_cast<int>(records.size());
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& r : records) {
        if (!r.estimate) {
            ++s.skipped;
            continue;
        }
        const double e = r.error_cm.value();
        sum += e;
        sum_sq += e * e;
        s.max_cm = std::max(s.max_cm, e);
        ++s.estimated;
    }
    if (s.estimated == 0) throw std::runtime_error("error_stats: all steps skipped");
    s.mean_cm = sum / s.estimated;
    s.rmse_cm = std::sqrt(sum_sq / s.estimated);
    return s;
}

}  // namespace ntcwla
