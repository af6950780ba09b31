#include "caes/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "caes/state.hpp"

namespace caes {

double ideal_gas_pressure(double mass_kg, double temp_k, const CavernParams& params) {
    if (!(mass_kg > 0.0) || !(temp_k > 0.0)) {
        throw std::domain_error("ideal_gas_pressure: mass and temperature must be positive");
    }
    return mass_kg * params.gas_constant_j_kgk * temp_k / params.volume_m3;
}

double mass_from_state(double pressure_pa, double temp_k, const CavernParams& params) {
    if (!(pressure_pa > 0.0) || !(temp_k > 0.0)) {
        throw std::domain_error("mass_from_state: pressure and temperature must be positive");
    }
    return pressure_pa * params.volume_m3 / (params.gas_constant_j_kgk * temp_k);
}

double adiabatic_invariant(double temp_k, double pressure_pa, double adiabatic_index) {
    if (!(temp_k > 0.0) || !(pressure_pa > 0.0)) {
        throw std::domain_error("adiabatic_invariant: temperature and pressure must be positive");
    }
    if (!(adiabatic_index > 1.0)) {
        throw std::domain_error("adiabatic_invariant: adiabatic index must exceed 1");
    }
    const double k = adiabatic_index;
    return std::pow(temp_k, k / (k - 1.0)) / pressure_pa;
}

double first_order_binomial(double x, double exponent) {
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("first_order_binomial: |x| must be below 1");
    }
    return 1.0 + exponent * x;
}

double first_order_binomial_error_bound(double x, double exponent) {
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("first_order_binomial_error_bound: |x| must be below 1");
    }
    const double lead = std::abs(exponent * (exponent - 1.0) / 2.0) * x * x;
    const double shrink = exponent < 2.0 ? std::pow(1.0 - std::abs(x), exponent - 2.0) : 1.0;
    return lead * shrink;
}

}  // namespace caes
