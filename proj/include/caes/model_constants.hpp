#pragma once

#include "caes/params.hpp"

namespace caes {

/// Constants of the bi-linear model for a given parameter set.
///
/// charge_pressure_coeff scales m^(k-1)*mdot*dt to Pa in the charging
/// pressure update; charge_temp_coeff scales m^(k-2)*mdot*dt to K in the
/// charging temperature update. Both are fixed by the compressor-outlet
/// conditions:
///   charge_pressure_coeff = R^k T_in^k / (V^k p_in^(k-1))
///   charge_temp_coeff     = R^(k-1) T_in^k / (V^(k-1) p_in^(k-1))
/// They are validated against the staged exact computation (see tests): the
/// closed forms
///   p' = p (1 + x)^(k-1) + charge_pressure_coeff * (m + mdot dt)^(k-1) * mdot dt
///   T' = T (1 + x)^(k-2) + charge_temp_coeff     * (m + mdot dt)^(k-2) * mdot dt
/// with x = mdot dt / m reproduce the staged result exactly for ideal-gas
/// consistent states.
struct ModelConstants {
    double charge_pressure_coeff;
    double charge_temp_coeff;
    double anchor_mass_kg;
    double heat_group;  ///< h_c A_c / c_v

    /// Dimensionless idle decay exponent h_c A_c dt / (m_anchor c_v).
    double idle_exponent(double dt_s) const {
        return heat_group * dt_s / anchor_mass_kg;
    }
};

ModelConstants make_model_constants(const CavernParams& params);

/// Tangent-line expansions of the mass powers m^k, m^(k-1), m^(k-2) about
/// the anchor mass. These are what make the charging step affine in the
/// cavern mass.
double anchor_power_k(double mass_kg, const CavernParams& params);
double anchor_power_km1(double mass_kg, const CavernParams& params);
double anchor_power_km2(double mass_kg, const CavernParams& params);

}  // namespace caes
