#include "caes/trace.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace caes {

namespace {

long long steps_for(const FlowSegment& seg, double dt_s) {
    const long long n = std::llround(seg.duration_s / dt_s);
    if (n < 1 || std::abs(static_cast<double>(n) * dt_s - seg.duration_s) > 1e-6) {
        std::ostringstream msg;
        msg << "run: step " << dt_s << " s does not divide the " << seg.duration_s
            << " s segment";
        throw std::invalid_argument(msg.str());
    }
    return n;
}

}  // namespace

SimulationTrace run(const Scenario& scenario, ModelKind model, double dt_s,
                    const CavernParams& params) {
    if (dt_s < 0.0) {
        throw std::invalid_argument("run: step size must be positive (or 0 for per-segment)");
    }

    SimulationTrace trace;
    trace.model = model;
    trace.scenario = scenario.name;

    CavernState state = scenario.initial_state(params);
    trace.records.push_back(state);

    double segment_start = 0.0;
    for (const FlowSegment& seg : scenario.segments) {
        const double dt = dt_s > 0.0 ? dt_s : seg.dt_s;
        const long long steps = steps_for(seg, dt);
        bool warned = false;
        for (long long i = 0; i < steps; ++i) {
            if (!warned) {
                if (auto msg = envelope_warning(model, state, seg.mode, seg.mdot_kg_s, dt, params)) {
                    trace.warnings.emplace_back(state.time_s, *msg);
                    warned = true;  // first strained step per segment is enough
                }
            }
            try {
                state = model_step(model, state, seg.mode, seg.mdot_kg_s, dt, params);
            } catch (const std::domain_error& err) {
                std::ostringstream msg;
                msg << "run: scenario '" << scenario.name << "' failed at t=" << state.time_s
                    << " s: " << err.what();
                throw std::runtime_error(msg.str());
            }
            // Timestamps are recomputed from the step index so that equal
            // inputs give bitwise-equal traces with no accumulation drift.
            state.time_s = segment_start + static_cast<double>(i + 1) * dt;
            trace.records.push_back(state);
        }
        segment_start += seg.duration_s;
    }
    return trace;
}

}  // namespace caes
