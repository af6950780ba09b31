#pragma once

#include <string>
#include <utility>
#include <vector>

#include "caes/scenario.hpp"
#include "caes/steps.hpp"

namespace caes {

/// Time series produced by one model run. Records are strictly increasing in
/// time and start with the initial state. Warnings carry the first time a
/// validity envelope was strained in each segment.
struct SimulationTrace {
    ModelKind model;
    std::string scenario;
    std::vector<CavernState> records;
    std::vector<std::pair<double, std::string>> warnings;
};

/// Sequential fold of the model's step over all segments. dt_s > 0 overrides
/// every segment's own step size (and must divide each segment duration);
/// dt_s == 0 keeps the per-segment steps. Deterministic: identical inputs
/// produce bitwise-identical traces. Step-level domain errors abort with the
/// failing timestamp in the message.
SimulationTrace run(const Scenario& scenario, ModelKind model, double dt_s,
                    const CavernParams& params);

}  // namespace caes
