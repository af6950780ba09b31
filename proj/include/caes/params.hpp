#pragma once

namespace caes {

/// Physical and geometric constants of one cavern. Immutable after
/// construction; carried explicitly everywhere so a two-cavern plant can run
/// two parameter sets side by side.
struct CavernParams {
    double volume_m3;          ///< cavern volume V_s
    double wall_area_m2;       ///< wall surface area A_c
    double wall_htc_w_m2k;     ///< wall heat transfer coefficient h_c
    double cv_j_kgk;           ///< constant-volume specific heat of air
    double gas_constant_j_kgk; ///< specific gas constant of air R
    double adiabatic_index;    ///< k, > 1
    double wall_temp_k;        ///< cavern wall temperature
    double inlet_pressure_pa;  ///< pressure of air delivered by the compressor train
    double inlet_temp_k;       ///< temperature of air delivered by the compressor train
    double avg_density_kg_m3;  ///< assumed-constant average air density in the cavern
    double anchor_mass_kg;     ///< linearization anchor, always avg_density * volume

    /// h_c * A_c / c_v, the recurring heat-transfer group (kg*K/s per K gap).
    double heat_group() const { return wall_htc_w_m2k * wall_area_m2 / cv_j_kgk; }
};

/// Validates all invariants (strictly positive fields, adiabatic index > 1)
/// and derives anchor_mass_kg = avg_density * volume.
/// Throws std::invalid_argument on violation.
CavernParams make_params(double volume_m3, double wall_area_m2, double wall_htc_w_m2k,
                         double cv_j_kgk, double gas_constant_j_kgk, double adiabatic_index,
                         double wall_temp_k, double inlet_pressure_pa, double inlet_temp_k,
                         double avg_density_kg_m3);

/// Huntorf plant, first cavern (141,000 m3). The average cavern density
/// defaults to the value at the middle of the 46..66 bar operating band and
/// the wall temperature.
CavernParams huntorf_params();

/// Huntorf with an explicit average density override (kg/m3).
CavernParams huntorf_params(double avg_density_kg_m3);

}  // namespace caes
