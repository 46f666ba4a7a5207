#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntcwla/simulator.hpp"

namespace ntcwla {

// Doubles are printed with 17 significant digits so every file re-reads to
// the identical value.
std::string format_double(double v);

// Step CSV: time_s,true_x_cm,true_y_cm,est_x_cm,est_y_cm,error_cm,ann,n_triples
// with empty estimate fields on skipped periods.
void write_steps_csv(const std::filesystem::path& path, const std::vector<StepRecord>& steps);
std::vector<StepRecord> read_steps_csv(const std::filesystem::path& path);

nlohmann::json summary_to_json(const Summary& summary);
void write_summary_json(const std::filesystem::path& path, const nlohmann::json& summary);

// Period trace CSV: check_index,period_ms,m_count,n_count
void write_period_trace_csv(const std::filesystem::path& path,
                            const std::vector<PeriodCheck>& checks);

}  // namespace ntcwla
