#include "caes/metrics.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "caes/units.hpp"

namespace caes {

ErrorReport compare(const SimulationTrace& candidate, const SimulationTrace& reference) {
    if (candidate.scenario != reference.scenario) {
        throw std::invalid_argument("compare: traces come from different scenarios");
    }
    if (candidate.records.size() != reference.records.size()) {
        throw std::invalid_argument("compare: traces have different record counts");
    }
    if (candidate.records.empty()) {
        throw std::invalid_argument("compare: empty traces");
    }

    ErrorReport rep{};
    double sum_p = 0.0;
    double sum_T = 0.0;
    for (size_t i = 0; i < candidate.records.size(); ++i) {
        const CavernState& a = candidate.records[i];
        const CavernState& b = reference.records[i];
        if (a.time_s != b.time_s) {
            throw std::invalid_argument("compare: traces have mismatched timestamps");
        }
        const double dp = a.pressure_pa - b.pressure_pa;
        const double dT = a.temp_k - b.temp_k;
        sum_p += std::abs(dp) / b.pressure_pa;
        sum_T += std::abs(dT) / b.temp_k;
        rep.max_abs_p_pa = std::max(rep.max_abs_p_pa, std::abs(dp));
        rep.max_abs_T_k = std::max(rep.max_abs_T_k, std::abs(dT));
    }
    const double n = static_cast<double>(candidate.records.size());
    rep.mare_p = sum_p / n;
    rep.mare_T = sum_T / n;

    const CavernState& last_a = candidate.records.back();
    const CavernState& last_b = reference.records.back();
    rep.final_err_p_pa = last_a.pressure_pa - last_b.pressure_pa;
    rep.final_err_T_k = last_a.temp_k - last_b.temp_k;
    rep.final_rel_p = rep.final_err_p_pa / last_b.pressure_pa;
    rep.final_rel_T = rep.final_err_T_k / last_b.temp_k;
    return rep;
}

std::vector<double> default_sweep_intervals() { return {1.0, 60.0, 300.0, 600.0, 1200.0, 3600.0}; }

std::vector<SweepRow> interval_sweep(const Scenario& scenario, const std::vector<double>& intervals_s,
                                     const CavernParams& params) {
    if (intervals_s.empty()) {
        throw std::invalid_argument("interval_sweep: no intervals given");
    }

    auto one = [&scenario, &params](double interval) {
        const SimulationTrace bilinear = run(scenario, ModelKind::BiLinear, interval, params);
        const SimulationTrace oracle = run(scenario, ModelKind::ReferenceOracle, interval, params);
        const ErrorReport rep = compare(bilinear, oracle);
        SweepRow row{};
        row.interval_s = interval;
        row.final_err_T_k = rep.final_err_T_k;
        row.final_rel_T = rep.final_rel_T;
        row.final_rel_T_celsius =
            rep.final_err_T_k / units::kelvin_to_celsius(oracle.records.back().temp_k);
        row.final_err_p_pa = rep.final_err_p_pa;
        row.final_rel_p = rep.final_rel_p;
        return row;
    };

    // Independent runs; joined in input order.
    std::vector<std::future<SweepRow>> futures;
    futures.reserve(intervals_s.size());
    for (double interval : intervals_s) {
        futures.push_back(std::async(std::launch::async, one, interval));
    }
    std::vector<SweepRow> rows;
    rows.reserve(intervals_s.size());
    for (auto& f : futures) {
        rows.push_back(f.get());
    }
    return rows;
}

}  // namespace caes
