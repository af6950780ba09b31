#pragma once

#include <string>

namespace caes {

/// Operating mode of a schedule segment.
enum class Mode { Charge, Discharge, Idle };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);

/// Air state in the cavern at one time instant. States produced by the exact
/// models satisfy the ideal gas law to 1e-10 relative; the bi-linear models
/// track it only approximately.
struct CavernState {
    double time_s;
    double mass_kg;
    double pressure_pa;
    double temp_k;
};

/// One piece of an operating schedule: constant mass flow for a duration,
/// stepped at dt. mdot is the charged (Charge) or discharged (Discharge)
/// flow and must be zero for Idle.
struct FlowSegment {
    Mode mode;
    double mdot_kg_s;
    double duration_s;
    double dt_s;

    long long step_count() const;
};

/// Validates segment invariants: mdot >= 0 and zero iff idle, dt > 0,
/// duration an integer multiple of dt. Throws std::invalid_argument.
FlowSegment make_segment(Mode mode, double mdot_kg_s, double duration_s, double dt_s);

}  // namespace caes
