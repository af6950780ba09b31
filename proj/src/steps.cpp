#include "caes/steps.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "caes/charge_stages.hpp"
#include "caes/model_constants.hpp"
#include "caes/thermo.hpp"

namespace caes {

namespace {

// Mass balances are written as a single expression on the incoming mass
// (m + mdot*dt, m - mdot*dt) so that traces are bitwise reproducible.

// Staged exact charging parametrized by the transferred slug mass. The
// physics of the adiabatic charge depends on the slug mass only, which lets
// the reference integrator partition a step into sub-slugs without drift.
CavernState charge_update(const CavernState& state, double slug_mass_kg,
                          const CavernParams& params) {
    if (slug_mass_kg == 0.0) {
        return state;
    }
    const double k = params.adiabatic_index;
    // Reuse the staged pipeline with a unit step carrying the whole slug.
    VirtualChargeStates vs = charge_stage1(state, slug_mass_kg, 1.0, params);
    vs = charge_stage2(vs, state, slug_mass_kg, 1.0, params);

    const double total_mass = state.mass_kg + slug_mass_kg;
    const double density_term = params.gas_constant_j_kgk * total_mass / params.volume_m3;
    const double pressure = std::pow(vs.mixed_invariant, k - 1.0) * std::pow(density_term, k);
    const double temp = std::pow(vs.mixed_invariant * pressure, 1.0 - 1.0 / k);
    return CavernState{state.time_s, total_mass, pressure, temp};
}

CavernState discharge_update(const CavernState& state, double out_mass_kg,
                             const CavernParams& params) {
    if (out_mass_kg == 0.0) {
        return state;
    }
    if (!(out_mass_kg < state.mass_kg)) {
        throw std::domain_error("discharge: extracted mass reaches the cavern mass");
    }
    const double k = params.adiabatic_index;
    const double kept = 1.0 - out_mass_kg / state.mass_kg;
    return CavernState{state.time_s, state.mass_kg - out_mass_kg,
                       std::pow(kept, k) * state.pressure_pa,
                       std::pow(kept, k - 1.0) * state.temp_k};
}

// Exponential relaxation of the air toward the wall temperature. The heat
// balance is m c_v dT/dt = h_c A_c (T_wall - T), so the time constant is
// m c_v / (h_c A_c) at the current mass. Pressure follows the ideal gas law.
CavernState relax_update(const CavernState& state, double dt_s, const CavernParams& params) {
    if (params.wall_htc_w_m2k == 0.0) {
        return state;
    }
    const double rate = params.heat_group() / state.mass_kg;  // 1/s
    const double decayed = std::exp(-rate * dt_s);
    const double temp = (state.temp_k - params.wall_temp_k) * decayed + params.wall_temp_k;
    return CavernState{state.time_s, state.mass_kg,
                       ideal_gas_pressure(state.mass_kg, temp, params), temp};
}

CavernState advance_time(CavernState state, double dt_s) {
    state.time_s += dt_s;
    return state;
}

void require_flow_step(double mdot_kg_s, double dt_s, const char* where) {
    if (mdot_kg_s < 0.0) {
        throw std::domain_error(std::string(where) + ": flow rate must be non-negative");
    }
    if (!(dt_s > 0.0)) {
        throw std::domain_error(std::string(where) + ": step size must be positive");
    }
}

}  // namespace

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::ExactAdiabatic: return "exact-adiabatic";
        case ModelKind::ExactWithHeatTransfer: return "exact";
        case ModelKind::BiLinear: return "bilinear";
        case ModelKind::ConstantTemperature: return "const-temp";
        case ModelKind::ReferenceOracle: return "oracle";
    }
    throw std::logic_error("to_string: bad ModelKind");
}

ModelKind model_from_string(const std::string& name) {
    if (name == "exact-adiabatic") return ModelKind::ExactAdiabatic;
    if (name == "exact") return ModelKind::ExactWithHeatTransfer;
    if (name == "bilinear") return ModelKind::BiLinear;
    if (name == "const-temp" || name == "constant-temperature") {
        return ModelKind::ConstantTemperature;
    }
    if (name == "oracle") return ModelKind::ReferenceOracle;
    throw std::invalid_argument("model_from_string: unknown model '" + name +
                                "' (expected exact|bilinear|const-temp|oracle|exact-adiabatic)");
}

CavernState charge_step_exact(const CavernState& state, double mdot_kg_s, double dt_s,
                              const CavernParams& params) {
    require_flow_step(mdot_kg_s, dt_s, "charge_step_exact");
    return advance_time(charge_update(state, mdot_kg_s * dt_s, params), dt_s);
}

CavernState discharge_step_exact(const CavernState& state, double mdot_kg_s, double dt_s,
                                 const CavernParams& params) {
    require_flow_step(mdot_kg_s, dt_s, "discharge_step_exact");
    return advance_time(discharge_update(state, mdot_kg_s * dt_s, params), dt_s);
}

CavernState idle_step_exact(const CavernState& state, double dt_s, const CavernParams& params) {
    if (!(dt_s > 0.0)) {
        throw std::domain_error("idle_step_exact: step size must be positive");
    }
    return advance_time(relax_update(state, dt_s, params), dt_s);
}

CavernState charge_step_bilinear(const CavernState& state, double mdot_kg_s, double dt_s,
                                 const CavernParams& params) {
    require_flow_step(mdot_kg_s, dt_s, "charge_step_bilinear");
    const double k = params.adiabatic_index;
    const double R = params.gas_constant_j_kgk;
    const double V = params.volume_m3;
    const double H = params.heat_group();
    const double m0 = params.anchor_mass_kg;
    const ModelConstants mc = make_model_constants(params);

    const double m = state.mass_kg;
    const double p = state.pressure_pa;
    const double T = state.temp_k;
    const double Tw = params.wall_temp_k;
    const double t = dt_s;
    const double flow = mdot_kg_s;

    // Products m*T' and m*p'; every term is affine in (m, p, T) for fixed
    // flow, and affine in the flow for fixed state.
    const double mass_temp =
        T * (m + (k - 2.0) * flow * t) + mc.charge_temp_coeff * flow * t * anchor_power_km1(m, params) +
        H * ((Tw - T) * t - 0.5 * (k - 2.0) * T * flow * t * t / m0 -
             0.5 * mc.charge_temp_coeff * flow * t * t * anchor_power_km2(m, params));
    const double mass_pressure =
        p * (m + (k - 1.0) * flow * t) + mc.charge_pressure_coeff * flow * t * anchor_power_k(m, params) +
        H * ((m + 0.5 * flow * t) * Tw * t * R / V - p * t -
             0.5 * (k - 1.0) * flow * T * t * t * R / V);

    return CavernState{state.time_s + t, m + flow * t, mass_pressure / m, mass_temp / m};
}

CavernState discharge_step_bilinear(const CavernState& state, double mdot_kg_s, double dt_s,
                                    const CavernParams& params) {
    require_flow_step(mdot_kg_s, dt_s, "discharge_step_bilinear");
    if (!(mdot_kg_s * dt_s < state.mass_kg)) {
        throw std::domain_error("discharge_step_bilinear: extracted mass reaches the cavern mass");
    }
    const double k = params.adiabatic_index;
    const double R = params.gas_constant_j_kgk;
    const double V = params.volume_m3;
    const double H = params.heat_group();
    const double m0 = params.anchor_mass_kg;

    const double m = state.mass_kg;
    const double p = state.pressure_pa;
    const double T = state.temp_k;
    const double Tw = params.wall_temp_k;
    const double t = dt_s;
    const double flow = mdot_kg_s;

    const double mass_temp = m * T - (k - 1.0) * T * flow * t + H * (Tw - T) * t +
                             H / (2.0 * m0) * (k - 1.0) * T * flow * t * t;
    const double mass_pressure =
        (m - k * flow * t) * p +
        H * R / V * ((m - 0.5 * flow * t) * (Tw - T) * t + 0.5 * (k - 1.0) * T * flow * t * t);

    return CavernState{state.time_s + t, m - flow * t, mass_pressure / m, mass_temp / m};
}

CavernState idle_step_bilinear(const CavernState& state, double dt_s, const CavernParams& params) {
    if (!(dt_s > 0.0)) {
        throw std::domain_error("idle_step_bilinear: step size must be positive");
    }
    const ModelConstants mc = make_model_constants(params);
    const double m0 = params.anchor_mass_kg;
    const double a4 = mc.idle_exponent(dt_s);
    const double e = std::exp(-a4);
    // Decay factor linearized in the cavern mass about the anchor.
    const double f = e + a4 / m0 * e * (state.mass_kg - m0);

    const double Tw = params.wall_temp_k;
    const double temp = (state.temp_k - Tw) * f + Tw;
    const double wall_pressure =
        state.mass_kg * params.gas_constant_j_kgk * Tw / params.volume_m3;
    const double pressure = state.pressure_pa * f + wall_pressure * (1.0 - f);
    return CavernState{state.time_s + dt_s, state.mass_kg, pressure, temp};
}

CavernState constant_temperature_step(const CavernState& state, Mode mode, double mdot_kg_s,
                                      double dt_s, const CavernParams& params) {
    require_flow_step(mdot_kg_s, dt_s, "constant_temperature_step");
    double mass = state.mass_kg;
    if (mode == Mode::Charge) {
        mass = state.mass_kg + mdot_kg_s * dt_s;
    } else if (mode == Mode::Discharge) {
        if (!(mdot_kg_s * dt_s < state.mass_kg)) {
            throw std::domain_error(
                "constant_temperature_step: extracted mass reaches the cavern mass");
        }
        mass = state.mass_kg - mdot_kg_s * dt_s;
    }
    return CavernState{state.time_s + dt_s, mass,
                       ideal_gas_pressure(mass, state.temp_k, params), state.temp_k};
}

CavernState oracle_step(const CavernState& state, Mode mode, double mdot_kg_s, double dt_s,
                        const CavernParams& params, long long substeps) {
    require_flow_step(mdot_kg_s, dt_s, "oracle_step");
    if (substeps < 0) {
        throw std::domain_error("oracle_step: substeps must be >= 1 (or 0 for the default)");
    }
    if (mode == Mode::Idle || mdot_kg_s == 0.0) {
        // The relaxation composes exactly over sub-intervals; one closed-form
        // application is the converged answer for any substep count.
        return advance_time(relax_update(state, dt_s, params), dt_s);
    }
    const long long n = substeps > 0 ? substeps : static_cast<long long>(std::ceil(dt_s / 0.1));
    const double h = dt_s / static_cast<double>(n);
    const double total = mdot_kg_s * dt_s;
    const double sub = total / static_cast<double>(n);
    const double target_mass =
        mode == Mode::Charge ? state.mass_kg + total : state.mass_kg - total;

    CavernState s = state;
    for (long long i = 0; i < n; ++i) {
        // Last sub-slug takes the remainder so the step's mass balance is
        // exact to the bit.
        double piece = sub;
        if (i == n - 1) {
            piece = mode == Mode::Charge ? target_mass - s.mass_kg : s.mass_kg - target_mass;
        }
        s = mode == Mode::Charge ? charge_update(s, piece, params)
                                 : discharge_update(s, piece, params);
        s = relax_update(s, h, params);
    }
    return advance_time(s, dt_s);
}

CavernState model_step(ModelKind kind, const CavernState& state, Mode mode, double mdot_kg_s,
                       double dt_s, const CavernParams& params) {
    switch (kind) {
        case ModelKind::ExactAdiabatic:
            switch (mode) {
                case Mode::Charge: return charge_step_exact(state, mdot_kg_s, dt_s, params);
                case Mode::Discharge: return discharge_step_exact(state, mdot_kg_s, dt_s, params);
                case Mode::Idle: return advance_time(state, dt_s);
            }
            break;
        case ModelKind::ExactWithHeatTransfer:
            return oracle_step(state, mode, mdot_kg_s, dt_s, params, 1);
        case ModelKind::BiLinear:
            switch (mode) {
                case Mode::Charge: return charge_step_bilinear(state, mdot_kg_s, dt_s, params);
                case Mode::Discharge:
                    return discharge_step_bilinear(state, mdot_kg_s, dt_s, params);
                case Mode::Idle: return idle_step_bilinear(state, dt_s, params);
            }
            break;
        case ModelKind::ConstantTemperature:
            return constant_temperature_step(state, mode, mdot_kg_s, dt_s, params);
        case ModelKind::ReferenceOracle:
            return oracle_step(state, mode, mdot_kg_s, dt_s, params);
    }
    throw std::logic_error("model_step: bad ModelKind");
}

std::optional<std::string> envelope_warning(ModelKind kind, const CavernState& state, Mode mode,
                                            double mdot_kg_s, double dt_s,
                                            const CavernParams& params) {
    std::ostringstream msg;
    if (kind == ModelKind::BiLinear) {
        if (mode != Mode::Idle) {
            const double ratio = mdot_kg_s * dt_s / state.mass_kg;
            if (ratio > 0.1) {
                msg << "transferred mass ratio " << ratio
                    << " exceeds the bi-linear validity envelope (0.1)";
                return msg.str();
            }
        } else {
            const double offset =
                std::abs(state.mass_kg - params.anchor_mass_kg) / params.anchor_mass_kg;
            if (offset > 0.5) {
                msg << "mass offset from the anchor " << offset
                    << " exceeds the idle validity envelope (0.5)";
                return msg.str();
            }
        }
    } else if (kind == ModelKind::ExactAdiabatic || kind == ModelKind::ExactWithHeatTransfer) {
        if (mode == Mode::Charge) {
            const double ratio = mdot_kg_s * dt_s / state.mass_kg;
            if (ratio > 0.05) {
                msg << "injected mass ratio " << ratio
                    << " strains the staged-update assumption (0.05)";
                return msg.str();
            }
        }
    }
    return std::nullopt;
}

}  // namespace caes
