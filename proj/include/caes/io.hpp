#pragma once

#include <string>

#include "caes/metrics.hpp"
#include "caes/params.hpp"
#include "caes/scenario.hpp"
#include "caes/trace.hpp"

namespace caes::io {

/// Trace CSV: header `t_s,m_kg,p_pa,T_k`, one record per line, 17
/// significant digits, \n line endings.
std::string trace_csv(const SimulationTrace& trace);

/// Trace JSON mirroring the SimulationTrace fields.
std::string trace_json(const SimulationTrace& trace);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

/// Atomically writes `content` to `path` (write to a temp file in the same
/// directory, then rename).
void write_file_atomic(const std::string& path, const std::string& content);

/// Parses a params JSON file with Table-I-facing keys and units
/// (bar, Celsius, SI for the rest):
///   V_s_m3, A_c_m2, h_c_w_m2k, c_v_j_kgk, R_j_kgk, k,
///   T_RW_c, p_in_bar, T_in_c, rho_av_kg_m3
/// Missing keys fall back to the Huntorf defaults.
CavernParams load_params_json(const std::string& path);

/// Parses a scenario JSON file:
///   { "name": ..., "initial_p_bar": ..., "initial_T_c": ...,
///     "segments": [ { "mode": "charge|discharge|idle",
///                     "mdot_kg_s": ..., "duration_s": ..., "dt_s": ... } ] }
Scenario load_scenario_json(const std::string& path);

}  // namespace caes::io
