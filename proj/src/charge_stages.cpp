#include "caes/charge_stages.hpp"

#include <cmath>
#include <stdexcept>

#include "caes/thermo.hpp"

namespace caes {

VirtualChargeStates charge_stage1(const CavernState& state, double mdot_kg_s, double dt_s,
                                  const CavernParams& params) {
    if (!(mdot_kg_s > 0.0) || !(dt_s > 0.0)) {
        throw std::domain_error("charge_stage1: flow rate and step must be positive");
    }
    const double slug_mass = mdot_kg_s * dt_s;
    if (!(slug_mass < state.mass_kg)) {
        throw std::domain_error(
            "charge_stage1: injected mass reaches the cavern mass; the virtual container "
            "would be as large as the cavern");
    }

    const double k = params.adiabatic_index;
    const double R = params.gas_constant_j_kgk;

    VirtualChargeStates vs{};
    // Container sized so the slug lands at the cavern's density.
    vs.slug_volume_m3 = params.volume_m3 * slug_mass / state.mass_kg;
    vs.inlet_invariant = adiabatic_invariant(params.inlet_temp_k, params.inlet_pressure_pa, k);
    // Adiabatic move of the slug from inlet conditions into the container.
    const double density_term = R * state.mass_kg / params.volume_m3;  // == slug_mass*R/V_in1
    vs.slug_temp_k = std::pow(vs.inlet_invariant * density_term, k - 1.0);
    vs.slug_pressure_pa = std::pow(vs.inlet_invariant, k - 1.0) * std::pow(density_term, k);
    return vs;
}

VirtualChargeStates charge_stage2(VirtualChargeStates partial, const CavernState& state,
                                  double mdot_kg_s, double dt_s, const CavernParams& params) {
    const double slug_mass = mdot_kg_s * dt_s;
    const double total_mass = slug_mass + state.mass_kg;
    const double k = params.adiabatic_index;

    // Constant-volume mixing with no heat exchange: mass-weighted average.
    const double mass_temp_sum = slug_mass * partial.slug_temp_k + state.mass_kg * state.temp_k;
    partial.mixed_temp_k = mass_temp_sum / total_mass;
    partial.mixed_pressure_pa =
        mass_temp_sum * params.gas_constant_j_kgk / (params.volume_m3 + partial.slug_volume_m3);
    partial.mixed_invariant = adiabatic_invariant(partial.mixed_temp_k, partial.mixed_pressure_pa, k);
    return partial;
}

}  // namespace caes
