#pragma once

#include "caes/params.hpp"
#include "caes/state.hpp"

namespace caes {

/// Intermediate quantities of one exact charging step, built in two stages.
///
/// A charging step is decomposed into virtual states: the injected slug is
/// first brought adiabatically from compressor-outlet conditions into a
/// virtual container whose volume is sized so the slug matches the cavern's
/// density (stage 1), then mixed with the cavern air at constant total
/// volume (stage 2), and finally the mixture is compressed adiabatically
/// back to the cavern volume (stage 3, in charge_step_exact).
struct VirtualChargeStates {
    double slug_volume_m3;        ///< virtual container volume for the injected slug
    double slug_pressure_pa;      ///< slug pressure after the adiabatic stage
    double slug_temp_k;           ///< slug temperature after the adiabatic stage
    double inlet_invariant;       ///< T^(k/(k-1))/p of compressor-outlet air
    // filled by charge_stage2:
    double mixed_temp_k = 0.0;    ///< mass-weighted mixing temperature
    double mixed_pressure_pa = 0.0;
    double mixed_invariant = 0.0; ///< T^(k/(k-1))/p of the mixed air
};

/// Stage 1: adiabatically bring the injected slug (mdot*dt at inlet
/// conditions) to the density of the cavern air. Requires mdot > 0 and
/// mdot*dt strictly below the cavern mass; throws std::domain_error when the
/// virtual container would reach the cavern size.
VirtualChargeStates charge_stage1(const CavernState& state, double mdot_kg_s, double dt_s,
                                  const CavernParams& params);

/// Stage 2: mix the slug with the cavern air at constant total volume and no
/// heat exchange. Mixing temperature is the mass-weighted average.
VirtualChargeStates charge_stage2(VirtualChargeStates partial, const CavernState& state,
                                  double mdot_kg_s, double dt_s, const CavernParams& params);

}  // namespace caes
