#pragma once

#include <vector>

#include "caes/trace.hpp"

namespace caes {

/// Accuracy of a trace against a reference trace. Mean absolute relative
/// errors are averaged over time-aligned records with the reference value as
/// denominator; final errors are signed (candidate minus reference).
struct ErrorReport {
    double mare_p;        ///< mean |dp| / p_ref
    double mare_T;        ///< mean |dT| / T_ref
    double max_abs_p_pa;
    double max_abs_T_k;
    double final_err_p_pa;
    double final_err_T_k;
    double final_rel_p;
    double final_rel_T;
};

/// Compares `candidate` against `reference`. Requires the same scenario and
/// identical timestamps; throws std::invalid_argument otherwise.
ErrorReport compare(const SimulationTrace& candidate, const SimulationTrace& reference);

/// One row of the time-interval sweep. The temperature relative error is
/// reported both against the reference in kelvin and against the reference
/// in Celsius (the convention of plant-level accuracy tables).
struct SweepRow {
    double interval_s;
    double final_err_T_k;
    double final_rel_T;         ///< on kelvin
    double final_rel_T_celsius; ///< on degrees Celsius
    double final_err_p_pa;
    double final_rel_p;
};

/// Runs the bi-linear model against the reference oracle at each interval
/// and reports final-state errors. Intervals must divide every segment
/// duration. Rows are computed concurrently and returned in input order.
std::vector<SweepRow> interval_sweep(const Scenario& scenario, const std::vector<double>& intervals_s,
                                     const CavernParams& params);

/// The sweep intervals of the verification study: 1 s, 1 min, 5 min,
/// 10 min, 20 min, 60 min.
std::vector<double> default_sweep_intervals();

}  // namespace caes
