#pragma once

#include <functional>
#include <vector>

#include "thp/assemble.hpp"

namespace thp {

struct TraceEntry {
    int stage = 0;
    int order = 0;
    int iteration = 0;
    double objective = 0.0;
    std::vector<double> b;
};

struct OptimizerSettings {
    /// Final boundary order K.
    int order = 6;
    /// Increasing boundary orders ending at `order`; empty means {2, 4, order}
    /// restricted to values below `order`.
    std::vector<int> schedule;
    /// Starting coefficients b_1.., zero-padded or truncated to the first stage.
    std::vector<double> initial{0.1};
    int max_iterations = 400;
    double step_tolerance = 1e-10;
    double value_tolerance = 1e-12;
    double penalty = 1e6;
    double simplex_scale = 0.05;
    double rank_tol = 1e-12;
    /// Called once per simplex iteration when set.
    std::function<void(const TraceEntry&)> trace;

    /// Effective stage orders; throws ErrorKind::Configuration when invalid.
    std::vector<int> stages() const;
};

struct StageSummary {
    int order = 0;
    int iterations = 0;
    int evaluations = 0;
    double objective = 0.0;
};

struct OptimizationResult {
    FitResult fit;
    std::vector<StageSummary> stages;
};

/// Nelder-Mead minimisation of F(a(b), b) + penalty * constraint_violation(b)
/// over the boundary coefficients, warm-started across the stage orders.
OptimizationResult minimize_boundary(const Collocation& collocation, const OptimizerSettings& settings);

FitResult minimize_boundary(const ProblemSpec& spec, const CollocationGrid& grid,
                            const FormalPowerTable& table, const OptimizerSettings& settings);

}  // namespace thp
