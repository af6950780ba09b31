#include "caes/params.hpp"

#include <stdexcept>
#include <string>

#include "caes/units.hpp"

namespace caes {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw std::invalid_argument("make_params: " + std::string(name) +
                                    " must be strictly positive");
    }
}

}  // namespace

CavernParams make_params(double volume_m3, double wall_area_m2, double wall_htc_w_m2k,
                         double cv_j_kgk, double gas_constant_j_kgk, double adiabatic_index,
                         double wall_temp_k, double inlet_pressure_pa, double inlet_temp_k,
                         double avg_density_kg_m3) {
    require_positive(volume_m3, "volume");
    require_positive(wall_area_m2, "wall area");
    if (wall_htc_w_m2k < 0.0) {
        throw std::invalid_argument("make_params: heat transfer coefficient must be >= 0");
    }
    require_positive(cv_j_kgk, "c_v");
    require_positive(gas_constant_j_kgk, "gas constant");
    if (!(adiabatic_index > 1.0)) {
        throw std::invalid_argument("make_params: adiabatic index must exceed 1");
    }
    require_positive(wall_temp_k, "wall temperature");
    require_positive(inlet_pressure_pa, "inlet pressure");
    require_positive(inlet_temp_k, "inlet temperature");
    require_positive(avg_density_kg_m3, "average density");

    return CavernParams{
        .volume_m3 = volume_m3,
        .wall_area_m2 = wall_area_m2,
        .wall_htc_w_m2k = wall_htc_w_m2k,
        .cv_j_kgk = cv_j_kgk,
        .gas_constant_j_kgk = gas_constant_j_kgk,
        .adiabatic_index = adiabatic_index,
        .wall_temp_k = wall_temp_k,
        .inlet_pressure_pa = inlet_pressure_pa,
        .inlet_temp_k = inlet_temp_k,
        .avg_density_kg_m3 = avg_density_kg_m3,
        .anchor_mass_kg = avg_density_kg_m3 * volume_m3,
    };
}

CavernParams huntorf_params() {
    // Density at the 46..66 bar band midpoint and the wall temperature.
    constexpr double mid_pressure_pa = 56e5;
    const double rho = mid_pressure_pa / (286.7 * units::celsius_to_kelvin(40.0));
    return huntorf_params(rho);
}

CavernParams huntorf_params(double avg_density_kg_m3) {
    return make_params(/*volume_m3=*/141000.0,
                       /*wall_area_m2=*/25000.0,
                       /*wall_htc_w_m2k=*/30.0,
                       /*cv_j_kgk=*/718.3,
                       /*gas_constant_j_kgk=*/286.7,
                       /*adiabatic_index=*/1.4,
                       /*wall_temp_k=*/units::celsius_to_kelvin(40.0),
                       /*inlet_pressure_pa=*/units::bar_to_pa(66.0),
                       /*inlet_temp_k=*/units::celsius_to_kelvin(50.0),
                       avg_density_kg_m3);
}

}  // namespace caes
