#include "ntcwla/reports.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ntcwla/errors.hpp"

namespace ntcwla {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

constexpr const char* kStepsHeader =
    "time_s,true_x_cm,true_y_cm,est_x_cm,est_y_cm,error_cm,ann,n_triples";

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double to_double(const std::string& s, const std::string& file, int line) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(file + ": line " + std::to_string(line) + ": malformed number '" +
                              s + "'");
    }
}

int to_int(const std::string& s, const std::string& file, int line) {
    try {
        size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(file + ": line " + std::to_string(line) + ": malformed integer '" +
                              s + "'");
    }
}

}  // namespace

void write_steps_csv(const std::filesystem::path& path, const std::vector<StepRecord>& steps) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << kStepsHeader << "\n";
    for (const auto& s : steps) {
        out << format_double(s.time_s) << ',' << format_double(s.true_position.x) << ','
            << format_double(s.true_position.y) << ',';
        if (s.estimate) {
            out << format_double(s.estimate->x) << ',' << format_double(s.estimate->y) << ','
                << format_double(s.error_cm.value());
        } else {
            out << ",,";
        }
        out << ',' << s.ann << ',' << s.n_triples << "\n";
    }
}

std::vector<StepRecord> read_steps_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    const std::string file = path.string();

    std::vector<StepRecord> steps;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kStepsHeader) {
                throw ValidationError(file + ": line 1: unexpected header");
            }
            saw_header = true;
            continue;
        }
        const auto f = split_csv(line);
        if (f.size() != 8) {
            throw ValidationError(file + ": line " + std::to_string(lineno) +
                                  ": expected 8 fields");
        }
        StepRecord s;
        s.time_s = to_double(f[0], file, lineno);
        s.true_position = {to_double(f[1], file, lineno), to_double(f[2], file, lineno)};
        const bool has_est = !f[3].empty() || !f[4].empty() || !f[5].empty();
        if (has_est) {
            s.estimate = Point2D{to_double(f[3], file, lineno), to_double(f[4], file, lineno)};
            s.error_cm = to_double(f[5], file, lineno);
        }
        s.ann = to_int(f[6], file, lineno);
        s.n_triples = to_int(f[7], file, lineno);
        steps.push_back(s);
    }
    if (!saw_header) throw ValidationError(file + ": empty steps file");
    return steps;
}

nlohmann::json summary_to_json(const Summary& summary) {
    nlohmann::json j;
    j["steps"] = summary.steps;
    j["estimated"] = summary.estimated;
    j["skipped"] = summary.skipped;
    if (summary.estimated > 0) {
        j["mean_cm"] = summary.mean_cm;
        j["rmse_cm"] = summary.rmse_cm;
        j["max_cm"] = summary.max_cm;
    } else {
        j["mean_cm"] = nullptr;
        j["rmse_cm"] = nullptr;
        j["max_cm"] = nullptr;
    }
    return j;
}

void write_summary_json(const std::filesystem::path& path, const nlohmann::json& summary) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << summary.dump(2) << "\n";
}

void write_period_trace_csv(const std::filesystem::path& path,
                            const std::vector<PeriodCheck>& checks) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << "check_index,period_ms,m_count,n_count\n";
    for (const auto& c : checks) {
        out << c.check_index << ',' << c.period_ms << ',' << c.m_count << ',' << c.n_count << "\n";
    }
}

}  // namespace ntcwla
