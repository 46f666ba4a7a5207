#include "ntcwla/period.hpp"

#include <algorithm>
#include <stdexcept>

#include "ntcwla/errors.hpp"

namespace ntcwla {

void PeriodConfig::validate() const {
    if (!(m_floor < n_floor)) throw ValidationError("period.m_floor must be < period.n_floor");
    if (!(x_step > y_step) || y_step <= std::chrono::milliseconds{0}) {
        throw ValidationError("period steps must satisfy x_step > y_step > 0");
    }
    if (x_limit < 0 || y_limit < 0) throw ValidationError("period limits must be >= 0");
    if (check_every < 1) throw ValidationError("period.check_every must be >= 1");
    if (min_period <= std::chrono::milliseconds{0} || min_period > initial_period ||
        initial_period > max_period) {
        throw ValidationError("period bounds must satisfy 0 < min <= initial <= max");
    }
}

PeriodState initial_state(const PeriodConfig& cfg) {
    cfg.validate();
    return PeriodState{cfg.initial_period, 0, 0, 0};
}

PeriodState record_period(PeriodState state, int am, const PeriodConfig& cfg) {
    if (am < 0) throw std::invalid_argument("am must be >= 0");
    ++state.periods_seen;
    if (am < cfg.n_floor) {
        ++state.n_count;
        if (am < cfg.m_floor) ++state.m_count;
    }
    return state;
}

PeriodState adjust(PeriodState state, const PeriodConfig& cfg) {
    if (state.periods_seen < cfg.check_every) {
        throw std::invalid_argument("adjust called before the check window elapsed");
    }
    if (state.m_count > cfg.x_limit) {
        state.period += cfg.x_step;
    } else if (state.n_count > cfg.y_limit) {
        state.period += cfg.y_step;
    } else if (state.m_count == 0 && state.n_count == 0) {
        state.period -= cfg.y_step;
    }
    state.period = std::clamp(state.period, cfg.min_period, cfg.max_period);
    state.m_count = 0;
    state.n_count = 0;
    state.periods_seen = 0;
    return state;
}

}  // namespace ntcwla
