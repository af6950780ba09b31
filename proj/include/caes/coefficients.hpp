#pragma once

#include <vector>

#include "caes/params.hpp"
#include "caes/state.hpp"

namespace caes {

/// One product term of a bi-linear step equation: coeff * factor(state),
/// optionally multiplied by the flow rate. The idle pressure equation also
/// needs a mass-squared factor (its wall term multiplies the mass by the
/// linearized exponential, which is itself affine in the mass).
enum class TermFactor {
    Unit,
    Mass,
    Pressure,
    Temperature,
    MassPressure,
    MassTemperature,
    MassSquared,
};

struct BilinearTerm {
    TermFactor factor;
    bool times_flow;
    double coeff;
};

/// Affine step coefficients for a fixed state: evaluating
///   p' = alpha_p + beta_p * mdot,  T' = alpha_T + beta_T * mdot
/// reproduces the corresponding bi-linear step. The term lists carry the
/// full product form for multi-step embedding: for charge/discharge they sum
/// to m*p' and m*T' (the paper-facing products with the step's initial
/// mass), for idle directly to p' and T'.
struct StepCoefficients {
    double alpha_p;  ///< Pa
    double beta_p;   ///< Pa s / kg
    double alpha_T;  ///< K
    double beta_T;   ///< K s / kg
    bool product_form;  ///< true when the term lists evaluate to m * p', m * T'
    std::vector<BilinearTerm> pressure_terms;
    std::vector<BilinearTerm> temperature_terms;
};

/// Value of one term factor at a state.
double term_factor_value(TermFactor factor, const CavernState& state);

/// Sum of a term list at (state, mdot).
double evaluate_terms(const std::vector<BilinearTerm>& terms, const CavernState& state,
                      double mdot_kg_s);

/// Exports the bi-linear step at `state` as affine coefficients in the flow
/// rate plus the product-term list. Idle has no flow dependence
/// (beta_p = beta_T = 0).
StepCoefficients export_step_coefficients(const CavernState& state, Mode mode, double dt_s,
                                          const CavernParams& params);

}  // namespace caes
