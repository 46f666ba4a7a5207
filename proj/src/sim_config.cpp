#include "ntcwla/sim_config.hpp"

#include <fstream>
#include <string>

#include "ntcwla/errors.hpp"

namespace ntcwla {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError("config: " + path + ": " + msg);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) fail(path + key, "missing required field");
    return *it;
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

double number_or(const json& j, const std::string& key, double def, const std::string& path) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return def;
    return get_number(*it, path + key);
}

int int_or(const json& j, const std::string& key, int def, const std::string& path) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return def;
    if (!it->is_number_integer()) fail(path + key, "expected an integer");
    return it->get<int>();
}

Point2D get_point(const json& j, const std::string& path, double scale) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
    return {get_number(j[0], path + "[0]") * scale, get_number(j[1], path + "[1]") * scale};
}

TraceSpec parse_trace(const json& j, double scale) {
    const std::string path = "trace.";
    TraceSpec t;
    const std::string kind = member(j, "kind", path).get<std::string>();
    if (kind == "diagonal") {
        t.kind = TraceSpec::Kind::LinearDiagonal;
        t.waypoints = {get_point(member(j, "start", path), path + "start", scale),
                       get_point(member(j, "end", path), path + "end", scale)};
    } else if (kind == "square") {
        t.kind = TraceSpec::Kind::SquarePerimeter;
        const Point2D lo = get_point(member(j, "min", path), path + "min", scale);
        const Point2D hi = get_point(member(j, "max", path), path + "max", scale);
        t.waypoints = {lo, {hi.x, lo.y}, hi, {lo.x, hi.y}, lo};
        t.loops = int_or(j, "loops", 1, path);
    } else if (kind == "waypoints") {
        t.kind = TraceSpec::Kind::Waypoints;
        const json& pts = member(j, "points", path);
        if (!pts.is_array()) fail(path + "points", "expected an array of [x, y]");
        for (size_t i = 0; i < pts.size(); ++i) {
            t.waypoints.push_back(
                get_point(pts[i], path + "points[" + std::to_string(i) + "]", scale));
        }
        t.loops = int_or(j, "loops", 1, path);
    } else {
        fail(path + "kind", "expected 'diagonal', 'square' or 'waypoints'");
    }
    t.speed_cm_per_s = get_number(member(j, "speed_cm_per_s", path), path + "speed_cm_per_s");
    if (j.contains("duration_s") && !j["duration_s"].is_null()) {
        t.duration_s = get_number(j["duration_s"], path + "duration_s");
    }
    return t;
}

PipelineConfig parse_pipeline(const json& j) {
    const std::string path = "pipeline.";
    PipelineConfig p;
    p.rpn = int_or(j, "rpn", p.rpn, path);
    p.mr_dbm = number_or(j, "mr_dbm", p.mr_dbm, path);
    p.rr_dbm = number_or(j, "rr_dbm", p.rr_dbm, path);
    if (j.contains("max_reliable") && !j["max_reliable"].is_null()) {
        p.max_reliable = int_or(j, "max_reliable", 0, path);
    }
    return p;
}

LocalizerConfig parse_localizer(const json& j) {
    const std::string path = "localizer.";
    LocalizerConfig l;
    l.filter_threshold_cm = number_or(j, "filter_threshold_cm", l.filter_threshold_cm, path);
    l.min_reliable = int_or(j, "min_reliable", l.min_reliable, path);
    return l;
}

PeriodConfig parse_period(const json& j) {
    const std::string path = "period.";
    PeriodConfig p;
    p.m_floor = int_or(j, "m_floor", p.m_floor, path);
    p.n_floor = int_or(j, "n_floor", p.n_floor, path);
    p.x_limit = int_or(j, "x_limit", p.x_limit, path);
    p.y_limit = int_or(j, "y_limit", p.y_limit, path);
    p.x_step = std::chrono::milliseconds{
        int_or(j, "x_step_ms", static_cast<int>(p.x_step.count()), path)};
    p.y_step = std::chrono::milliseconds{
        int_or(j, "y_step_ms", static_cast<int>(p.y_step.count()), path)};
    p.check_every = int_or(j, "check_every", p.check_every, path);
    p.min_period = std::chrono::milliseconds{
        int_or(j, "min_period_ms", static_cast<int>(p.min_period.count()), path)};
    p.max_period = std::chrono::milliseconds{
        int_or(j, "max_period_ms", static_cast<int>(p.max_period.count()), path)};
    p.initial_period = std::chrono::milliseconds{
        int_or(j, "initial_period_ms", static_cast<int>(p.initial_period.count()), path)};
    return p;
}

ChannelModel parse_channel(const json& j) {
    const std::string path = "channel.";
    ChannelModel c;
    c.d0_cm = number_or(j, "d0_cm", c.d0_cm, path);
    c.p_d0_dbm = number_or(j, "p_d0_dbm", c.p_d0_dbm, path);
    c.eta = number_or(j, "eta", c.eta, path);
    c.zeta_mean_dbm = number_or(j, "zeta_mean_dbm", c.zeta_mean_dbm, path);
    c.zeta_std_dbm = number_or(j, "zeta_std_dbm", c.zeta_std_dbm, path);
    c.noise_std_dbm = number_or(j, "noise_std_dbm", c.noise_std_dbm, path);
    return c;
}

double unit_scale(const json& doc) {
    const std::string units = doc.value("units", std::string{"m"});
    if (units == "m") return 100.0;
    if (units == "cm") return 1.0;
    fail("units", "expected 'm' or 'cm'");
}

}  // namespace

SimConfig parse_sim_config(const json& doc) {
    if (!doc.is_object()) throw ValidationError("config: expected a JSON object");
    const double scale = unit_scale(doc);

    SimConfig cfg;

    const json& beacons = member(doc, "beacons", "");
    if (!beacons.is_array()) fail("beacons", "expected an array");
    for (size_t i = 0; i < beacons.size(); ++i) {
        const std::string path = "beacons[" + std::to_string(i) + "].";
        const json& b = beacons[i];
        if (!b.is_object()) fail("beacons[" + std::to_string(i) + "]", "expected an object");
        const json& idj = member(b, "id", path);
        if (!idj.is_number_integer()) fail(path + "id", "expected an integer");
        cfg.beacons.emplace_back(idj.get<int>(),
                                 get_point(member(b, "pos", path), path + "pos", scale));
    }

    const json& area = member(doc, "area", "");
    cfg.area.min = get_point(member(area, "min", "area."), "area.min", scale);
    cfg.area.max = get_point(member(area, "max", "area."), "area.max", scale);

    cfg.channel = doc.contains("channel") ? parse_channel(doc["channel"]) : ChannelModel{};
    cfg.trace = parse_trace(member(doc, "trace", ""), scale);
    cfg.pipeline = doc.contains("pipeline") ? parse_pipeline(doc["pipeline"]) : PipelineConfig{};
    cfg.localizer = doc.contains("localizer") ? parse_localizer(doc["localizer"]) : LocalizerConfig{};
    cfg.period = doc.contains("period") ? parse_period(doc["period"]) : PeriodConfig{};

    cfg.packets_per_beacon_per_period =
        int_or(doc, "packets_per_beacon_per_period", cfg.packets_per_beacon_per_period, "");
    if (doc.contains("rng_seed") && !doc["rng_seed"].is_null()) {
        if (!doc["rng_seed"].is_number_integer()) fail("rng_seed", "expected an integer");
        cfg.rng_seed = doc["rng_seed"].get<std::uint64_t>();
    }
    if (doc.contains("n_cap") && !doc["n_cap"].is_null()) {
        cfg.n_cap = int_or(doc, "n_cap", 0, "");
    }
    if (doc.contains("params") && !doc["params"].is_null()) {
        const json& p = doc["params"];
        cfg.params = PathLossParams{get_number(member(p, "p1", "params."), "params.p1"),
                                    get_number(member(p, "p2", "params."), "params.p2")};
    }
    if (doc.contains("n_sweep") && !doc["n_sweep"].is_null()) {
        const json& sweep = doc["n_sweep"];
        if (!sweep.is_array()) fail("n_sweep", "expected an array of integers");
        for (size_t i = 0; i < sweep.size(); ++i) {
            if (!sweep[i].is_number_integer()) {
                fail("n_sweep[" + std::to_string(i) + "]", "expected an integer");
            }
            cfg.n_sweep.push_back(sweep[i].get<int>());
        }
    }

    cfg.validate();
    return cfg;
}

SimConfig load_sim_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    return parse_sim_config(doc);
}

void apply_override(json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ValidationError("override must look like path.to.field=value: " + assignment);
    }
    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);

    json* cur = &doc;
    size_t begin = 0;
    while (true) {
        const auto dot = path.find('.', begin);
        const std::string key = path.substr(begin, dot == std::string::npos ? dot : dot - begin);
        if (key.empty()) throw ValidationError("override has an empty path segment: " + assignment);
        if (dot == std::string::npos) {
            json value;
            try {
                value = json::parse(raw);
            } catch (const json::parse_error&) {
                value = raw;  // bare strings are fine
            }
            (*cur)[key] = value;
            return;
        }
        cur = &(*cur)[key];
        begin = dot + 1;
    }
}

ReplayConfig parse_replay_config(const json& doc) {
    if (!doc.is_object()) throw ValidationError("config: expected a JSON object");
    const double scale = unit_scale(doc);

    ReplayConfig cfg;
    const json& beacons = member(doc, "beacons", "");
    if (!beacons.is_array()) fail("beacons", "expected an array");
    for (size_t i = 0; i < beacons.size(); ++i) {
        const std::string path = "beacons[" + std::to_string(i) + "].";
        const json& b = beacons[i];
        const json& idj = member(b, "id", path);
        if (!idj.is_number_integer()) fail(path + "id", "expected an integer");
        const int id = idj.get<int>();
        if (!cfg.beacon_positions
                 .emplace(id, get_point(member(b, "pos", path), path + "pos", scale))
                 .second) {
            fail(path + "id", "duplicate beacon id");
        }
    }
    if (cfg.beacon_positions.size() < 3) fail("beacons", "need at least 3 beacons");

    const json& area = member(doc, "area", "");
    cfg.area.min = get_point(member(area, "min", "area."), "area.min", scale);
    cfg.area.max = get_point(member(area, "max", "area."), "area.max", scale);

    cfg.pipeline = doc.contains("pipeline") ? parse_pipeline(doc["pipeline"]) : PipelineConfig{};
    cfg.localizer = doc.contains("localizer") ? parse_localizer(doc["localizer"]) : LocalizerConfig{};
    cfg.pipeline.validate();
    cfg.localizer.validate();
    return cfg;
}

ReplayConfig load_replay_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    return parse_replay_config(doc);
}

PathLossParams load_params_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open params file: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    if (!doc.contains("p1") || !doc.contains("p2")) {
        throw ValidationError(path.string() + ": expected fields p1 and p2");
    }
    PathLossParams p{doc["p1"].get<double>(), doc["p2"].get<double>()};
    if (!(p.p1 < 0.0)) throw ValidationError(path.string() + ": p1 must be < 0");
    return p;
}

void write_params_json(const std::filesystem::path& path, const ParamSelection& sel) {
    json doc;
    doc["p1"] = sel.params.p1;
    doc["p2"] = sel.params.p2;
    doc["smooth_p1"] = sel.smooth_p1;
    doc["smooth_p2"] = sel.smooth_p2;
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write params file: " + path.string());
    out << doc.dump(2) << "\n";
}

}  // namespace ntcwla
