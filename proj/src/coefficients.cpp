#include "caes/coefficients.hpp"

#include <cmath>
#include <stdexcept>

#include "caes/model_constants.hpp"

namespace caes {

double term_factor_value(TermFactor factor, const CavernState& state) {
    switch (factor) {
        case TermFactor::Unit: return 1.0;
        case TermFactor::Mass: return state.mass_kg;
        case TermFactor::Pressure: return state.pressure_pa;
        case TermFactor::Temperature: return state.temp_k;
        case TermFactor::MassPressure: return state.mass_kg * state.pressure_pa;
        case TermFactor::MassTemperature: return state.mass_kg * state.temp_k;
        case TermFactor::MassSquared: return state.mass_kg * state.mass_kg;
    }
    throw std::logic_error("term_factor_value: bad TermFactor");
}

double evaluate_terms(const std::vector<BilinearTerm>& terms, const CavernState& state,
                      double mdot_kg_s) {
    double sum = 0.0;
    for (const BilinearTerm& term : terms) {
        double value = term.coeff * term_factor_value(term.factor, state);
        if (term.times_flow) {
            value *= mdot_kg_s;
        }
        sum += value;
    }
    return sum;
}

namespace {

// Splits a term list into the affine pieces alpha + beta * mdot at `state`,
// optionally normalizing by the state's mass (the charge/discharge lists sum
// to the m*X' products).
void affine_split(const std::vector<BilinearTerm>& terms, const CavernState& state,
                  bool product_form, double* alpha, double* beta) {
    double keep = 0.0;
    double flow = 0.0;
    for (const BilinearTerm& term : terms) {
        const double value = term.coeff * term_factor_value(term.factor, state);
        (term.times_flow ? flow : keep) += value;
    }
    const double scale = product_form ? state.mass_kg : 1.0;
    *alpha = keep / scale;
    *beta = flow / scale;
}

}  // namespace

StepCoefficients export_step_coefficients(const CavernState& state, Mode mode, double dt_s,
                                          const CavernParams& params) {
    if (!(dt_s > 0.0)) {
        throw std::invalid_argument("export_step_coefficients: step size must be positive");
    }
    const double k = params.adiabatic_index;
    const double R = params.gas_constant_j_kgk;
    const double V = params.volume_m3;
    const double H = params.heat_group();
    const double m0 = params.anchor_mass_kg;
    const double Tw = params.wall_temp_k;
    const double t = dt_s;
    const ModelConstants mc = make_model_constants(params);

    // Tangent-line pieces of the anchored mass powers, split by constant and
    // mass-proportional parts: m^r ~ c0 + c1 * m.
    const double pk_c0 = (1.0 - k) * std::pow(m0, k);
    const double pk_c1 = k * std::pow(m0, k - 1.0);
    const double pkm1_c0 = (2.0 - k) * std::pow(m0, k - 1.0);
    const double pkm1_c1 = (k - 1.0) * std::pow(m0, k - 2.0);
    const double pkm2_c0 = (3.0 - k) * std::pow(m0, k - 2.0);
    const double pkm2_c1 = (k - 2.0) * std::pow(m0, k - 3.0);

    StepCoefficients out{};
    out.product_form = mode != Mode::Idle;

    switch (mode) {
        case Mode::Charge: {
            const double a3 = mc.charge_temp_coeff;
            out.temperature_terms = {
                {TermFactor::MassTemperature, false, 1.0},
                {TermFactor::Temperature, true, (k - 2.0) * t - 0.5 * H * (k - 2.0) * t * t / m0},
                {TermFactor::Unit, true, a3 * t * pkm1_c0 - 0.5 * H * a3 * t * t * pkm2_c0},
                {TermFactor::Mass, true, a3 * t * pkm1_c1 - 0.5 * H * a3 * t * t * pkm2_c1},
                {TermFactor::Unit, false, H * Tw * t},
                {TermFactor::Temperature, false, -H * t},
            };
            const double a2 = mc.charge_pressure_coeff;
            out.pressure_terms = {
                {TermFactor::MassPressure, false, 1.0},
                {TermFactor::Pressure, true, (k - 1.0) * t},
                {TermFactor::Unit, true, a2 * t * pk_c0 + 0.5 * H * Tw * t * t * R / V},
                {TermFactor::Mass, true, a2 * t * pk_c1},
                {TermFactor::Mass, false, H * Tw * t * R / V},
                {TermFactor::Pressure, false, -H * t},
                {TermFactor::Temperature, true, -0.5 * H * (k - 1.0) * t * t * R / V},
            };
            break;
        }
        case Mode::Discharge: {
            out.temperature_terms = {
                {TermFactor::MassTemperature, false, 1.0},
                {TermFactor::Temperature, true, -(k - 1.0) * t + 0.5 * H * (k - 1.0) * t * t / m0},
                {TermFactor::Unit, false, H * Tw * t},
                {TermFactor::Temperature, false, -H * t},
            };
            out.pressure_terms = {
                {TermFactor::MassPressure, false, 1.0},
                {TermFactor::Pressure, true, -k * t},
                {TermFactor::Mass, false, H * R / V * Tw * t},
                {TermFactor::MassTemperature, false, -H * R / V * t},
                {TermFactor::Unit, true, -0.5 * H * R / V * Tw * t * t},
                {TermFactor::Temperature, true, 0.5 * H * R / V * k * t * t},
            };
            break;
        }
        case Mode::Idle: {
            const double a4 = mc.idle_exponent(t);
            const double e = std::exp(-a4);
            const double f_c0 = e * (1.0 - a4);
            const double f_c1 = e * a4 / m0;  // decay factor f = f_c0 + f_c1 * m
            out.temperature_terms = {
                {TermFactor::Temperature, false, f_c0},
                {TermFactor::MassTemperature, false, f_c1},
                {TermFactor::Mass, false, -Tw * f_c1},
                {TermFactor::Unit, false, Tw * (1.0 - f_c0)},
            };
            const double wall_gain = R * Tw / V;
            out.pressure_terms = {
                {TermFactor::Pressure, false, f_c0},
                {TermFactor::MassPressure, false, f_c1},
                {TermFactor::Mass, false, wall_gain * (1.0 - f_c0)},
                {TermFactor::MassSquared, false, -wall_gain * f_c1},
            };
            break;
        }
    }

    affine_split(out.pressure_terms, state, out.product_form, &out.alpha_p, &out.beta_p);
    affine_split(out.temperature_terms, state, out.product_form, &out.alpha_T, &out.beta_T);
    return out;
}

}  // namespace caes
