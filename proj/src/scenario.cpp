#include "caes/scenario.hpp"

#include <stdexcept>

#include "caes/thermo.hpp"
#include "caes/units.hpp"

namespace caes {

double Scenario::total_duration_s() const {
    double total = 0.0;
    for (const FlowSegment& seg : segments) {
        total += seg.duration_s;
    }
    return total;
}

CavernState Scenario::initial_state(const CavernParams& params) const {
    return CavernState{0.0, mass_from_state(initial_pressure_pa, initial_temp_k, params),
                       initial_pressure_pa, initial_temp_k};
}

std::vector<Scenario> builtin_scenarios() {
    using units::bar_to_pa;
    using units::celsius_to_kelvin;
    constexpr double hour = 3600.0;

    // Per-cavern maxima for the first cavern: plant flows of 108 kg/s
    // (charging) and 417 kg/s (discharging) split by cavern volume,
    // 141000 / (141000 + 169000).
    std::vector<Scenario> all;
    all.push_back(Scenario{"charging", bar_to_pa(46.0), celsius_to_kelvin(20.0),
                           {make_segment(Mode::Charge, 49.1226, 16.0 * hour, 1.0)}});
    all.push_back(Scenario{"discharging", bar_to_pa(66.0), celsius_to_kelvin(40.0),
                           {make_segment(Mode::Discharge, 189.6677, 4.0 * hour, 1.0)}});
    all.push_back(Scenario{"idle", bar_to_pa(60.0), celsius_to_kelvin(45.0),
                           {make_segment(Mode::Idle, 0.0, 16.0 * hour, 1.0)}});
    return all;
}

Scenario builtin_scenario(const std::string& name) {
    for (Scenario& s : builtin_scenarios()) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::invalid_argument("builtin_scenario: unknown scenario '" + name +
                                "' (expected charging|discharging|idle)");
}

}  // namespace caes
