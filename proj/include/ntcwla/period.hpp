#pragma once

#include <chrono>

namespace ntcwla {

// Localization-period controller constants. m_floor/n_floor grade the
// per-period reliable-beacon count (m_floor < n_floor); x/y limits and steps
// drive the adjustment at each check.
struct PeriodConfig {
    int m_floor = 3;
    int n_floor = 5;
    int x_limit = 2;
    int y_limit = 4;
    std::chrono::milliseconds x_step{500};
    std::chrono::milliseconds y_step{200};
    int check_every = 10;
    std::chrono::milliseconds min_period{200};
    std::chrono::milliseconds max_period{5000};
    std::chrono::milliseconds initial_period{1000};

    void validate() const;
};

struct PeriodState {
    std::chrono::milliseconds period{1000};
    int m_count = 0;    // periods with am < m_floor since the last check
    int n_count = 0;    // periods with am < n_floor since the last check
    int periods_seen = 0;
};

PeriodState initial_state(const PeriodConfig& cfg);

// Grades one period's reliable-beacon count into the shortage counters.
PeriodState record_period(PeriodState state, int am, const PeriodConfig& cfg);

// Severe shortage (m_count > x_limit) lengthens the period by x_step, mild
// shortage (n_count > y_limit) by y_step, a fully healthy window shortens it
// by y_step; the result is clamped to [min_period, max_period] and the
// counters reset.
PeriodState adjust(PeriodState state, const PeriodConfig& cfg);

}  // namespace ntcwla
