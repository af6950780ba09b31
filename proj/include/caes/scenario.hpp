#pragma once

#include <string>
#include <vector>

#include "caes/params.hpp"
#include "caes/state.hpp"

namespace caes {

/// An operating schedule: initial (p, T) plus an ordered list of flow
/// segments. The initial mass is derived from the ideal gas law.
struct Scenario {
    std::string name;
    double initial_pressure_pa;
    double initial_temp_k;
    std::vector<FlowSegment> segments;

    double total_duration_s() const;
    CavernState initial_state(const CavernParams& params) const;
};

/// The three Huntorf verification scenarios:
///   charging     46 bar / 20 C, 49.1226 kg/s for 16 h
///   discharging  66 bar / 40 C, 189.6677 kg/s for 4 h
///   idle         60 bar / 45 C, 16 h
/// All carry a default step of 1 s.
std::vector<Scenario> builtin_scenarios();

/// Looks up a builtin scenario by name. Throws std::invalid_argument for
/// unknown names.
Scenario builtin_scenario(const std::string& name);

}  // namespace caes
