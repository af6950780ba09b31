#pragma once

#include <optional>
#include <string>

#include "caes/params.hpp"
#include "caes/state.hpp"

namespace caes {

/// The four cavern models plus the fine-step reference.
enum class ModelKind {
    ExactAdiabatic,        ///< staged exact steps, no wall heat transfer
    ExactWithHeatTransfer, ///< staged exact steps + exponential wall relaxation
    BiLinear,              ///< the bi-linear model (affine in flow and state)
    ConstantTemperature,   ///< isothermal baseline
    ReferenceOracle,       ///< ExactWithHeatTransfer on a <= 0.1 s sub-grid
};

std::string to_string(ModelKind kind);
ModelKind model_from_string(const std::string& name);

// ---------------------------------------------------------------
// Exact steps
// ---------------------------------------------------------------

/// One exact adiabatic charging step: stage1 -> stage2 -> adiabatic
/// re-compression of the mixture to the cavern volume. Mass balance is
/// m' = m + mdot*dt; the output state is ideal-gas consistent.
CavernState charge_step_exact(const CavernState& state, double mdot_kg_s, double dt_s,
                              const CavernParams& params);

/// One exact adiabatic discharging step: the remaining air expands to fill
/// the cavern, preserving the adiabatic invariant. Throws std::domain_error
/// if mdot*dt would empty the cavern.
CavernState discharge_step_exact(const CavernState& state, double mdot_kg_s, double dt_s,
                                 const CavernParams& params);

/// Exponential relaxation of the air temperature toward the wall over dt,
/// with time constant m c_v / (h_c A_c). Mass unchanged, pressure follows
/// the ideal gas law. This is the exact idle step.
CavernState idle_step_exact(const CavernState& state, double dt_s, const CavernParams& params);

// ---------------------------------------------------------------
// Bi-linear steps
// ---------------------------------------------------------------

/// Bi-linear charging step with wall heat transfer. Computes the products
/// m*T' and m*p' (affine in each state variable and in mdot) and divides by
/// the step's initial mass. With h_c = 0 this reduces exactly to the
/// adiabatic bi-linear forms.
CavernState charge_step_bilinear(const CavernState& state, double mdot_kg_s, double dt_s,
                                 const CavernParams& params);

/// Bi-linear discharging step with wall heat transfer.
CavernState discharge_step_bilinear(const CavernState& state, double mdot_kg_s, double dt_s,
                                    const CavernParams& params);

/// Bi-linear idle step: the wall-relaxation exponential, linearized in the
/// cavern mass about the anchor mass. Identical to idle_step_exact when the
/// mass sits at the anchor.
CavernState idle_step_bilinear(const CavernState& state, double dt_s, const CavernParams& params);

// ---------------------------------------------------------------
// Baseline and reference
// ---------------------------------------------------------------

/// Constant-temperature baseline: T' = T, mass balance by mode, pressure
/// from the ideal gas law.
CavernState constant_temperature_step(const CavernState& state, Mode mode, double mdot_kg_s,
                                      double dt_s, const CavernParams& params);

/// Reference integrator: subdivides dt into substeps, each applying the
/// exact staged adiabatic update (or identity when idle) followed by the
/// exact wall relaxation over the sub-interval. substeps = 0 picks the
/// default (sub-interval <= 0.1 s). Doubling the substeps changes the output
/// by <= 1e-8 relative.
CavernState oracle_step(const CavernState& state, Mode mode, double mdot_kg_s, double dt_s,
                        const CavernParams& params, long long substeps = 0);

/// Dispatch one step of any model.
CavernState model_step(ModelKind kind, const CavernState& state, Mode mode, double mdot_kg_s,
                       double dt_s, const CavernParams& params);

/// Validity-envelope check for one step. Returns a warning message when the
/// step strains the model's assumptions (large injected-mass ratio, bi-linear
/// envelope breaches); such steps still run.
std::optional<std::string> envelope_warning(ModelKind kind, const CavernState& state, Mode mode,
                                            double mdot_kg_s, double dt_s,
                                            const CavernParams& params);

}  // namespace caes
