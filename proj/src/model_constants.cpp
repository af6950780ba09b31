#include "caes/model_constants.hpp"

#include <cmath>

namespace caes {

ModelConstants make_model_constants(const CavernParams& params) {
    const double k = params.adiabatic_index;
    const double R = params.gas_constant_j_kgk;
    const double V = params.volume_m3;
    const double T_in = params.inlet_temp_k;
    const double p_in = params.inlet_pressure_pa;

    ModelConstants mc{};
    mc.charge_pressure_coeff =
        std::pow(R, k) * std::pow(T_in, k) / (std::pow(V, k) * std::pow(p_in, k - 1.0));
    mc.charge_temp_coeff = std::pow(R, k - 1.0) * std::pow(T_in, k) /
                           (std::pow(V, k - 1.0) * std::pow(p_in, k - 1.0));
    mc.anchor_mass_kg = params.anchor_mass_kg;
    mc.heat_group = params.heat_group();
    return mc;
}

double anchor_power_k(double mass_kg, const CavernParams& params) {
    const double k = params.adiabatic_index;
    const double m0 = params.anchor_mass_kg;
    return std::pow(m0, k) + k * std::pow(m0, k - 1.0) * (mass_kg - m0);
}

double anchor_power_km1(double mass_kg, const CavernParams& params) {
    const double k = params.adiabatic_index;
    const double m0 = params.anchor_mass_kg;
    return std::pow(m0, k - 1.0) + (k - 1.0) * std::pow(m0, k - 2.0) * (mass_kg - m0);
}

double anchor_power_km2(double mass_kg, const CavernParams& params) {
    const double k = params.adiabatic_index;
    const double m0 = params.anchor_mass_kg;
    return std::pow(m0, k - 2.0) + (k - 2.0) * std::pow(m0, k - 3.0) * (mass_kg - m0);
}

}  // namespace caes
