#pragma once

#include "caes/params.hpp"

namespace caes {

/// p = m R T / V. Throws std::domain_error for non-positive m or T.
double ideal_gas_pressure(double mass_kg, double temp_k, const CavernParams& params);

/// m = p V / (R T), the inverse of ideal_gas_pressure. Throws
/// std::domain_error for non-positive p or T.
double mass_from_state(double pressure_pa, double temp_k, const CavernParams& params);

/// T^(k/(k-1)) / p, constant along a reversible adiabatic process of an
/// ideal gas. Throws std::domain_error unless T > 0, p > 0 and k > 1.
double adiabatic_invariant(double temp_k, double pressure_pa, double adiabatic_index);

/// First-order truncation of (1+x)^r, i.e. 1 + r*x. Requires |x| < 1.
///
/// For 0 < r < 2 the truncation error is bounded by
///   |r(r-1)/2| * x^2 * (1-|x|)^(r-2),
/// and for r outside that range the (1-|x|) factor must be replaced by
/// (1+|x|)^(r-2) when x > 0; the cavern model only uses exponents in
/// (-1, 2), where the first bound holds.
double first_order_binomial(double x, double exponent);

/// The truncation error bound documented above, for exponents in (-1, 2].
double first_order_binomial_error_bound(double x, double exponent);

}  // namespace caes
