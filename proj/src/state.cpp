#include "caes/state.hpp"

#include <cmath>
#include <stdexcept>

namespace caes {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Charge: return "charge";
        case Mode::Discharge: return "discharge";
        case Mode::Idle: return "idle";
    }
    throw std::logic_error("to_string: bad Mode");
}

Mode mode_from_string(const std::string& name) {
    if (name == "charge") return Mode::Charge;
    if (name == "discharge") return Mode::Discharge;
    if (name == "idle") return Mode::Idle;
    throw std::invalid_argument("mode_from_string: unknown mode '" + name +
                                "' (expected charge|discharge|idle)");
}

long long FlowSegment::step_count() const {
    return std::llround(duration_s / dt_s);
}

FlowSegment make_segment(Mode mode, double mdot_kg_s, double duration_s, double dt_s) {
    if (mdot_kg_s < 0.0) {
        throw std::invalid_argument("make_segment: flow rate must be non-negative");
    }
    if ((mdot_kg_s == 0.0) != (mode == Mode::Idle)) {
        throw std::invalid_argument("make_segment: flow rate must be zero exactly when idle");
    }
    if (!(dt_s > 0.0)) {
        throw std::invalid_argument("make_segment: step size must be positive");
    }
    if (!(duration_s > 0.0)) {
        throw std::invalid_argument("make_segment: duration must be positive");
    }
    const long long steps = std::llround(duration_s / dt_s);
    if (steps < 1 || std::abs(static_cast<double>(steps) * dt_s - duration_s) > 1e-6) {
        throw std::invalid_argument("make_segment: duration must be an integer multiple of dt");
    }
    return FlowSegment{mode, mdot_kg_s, duration_s, dt_s};
}

}  // namespace caes
