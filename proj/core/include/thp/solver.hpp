#pragma once

#include <string>

#include "thp/error.hpp"

#include "thp/assemble.hpp"
#include "thp/optimize.hpp"
#include "thp/particular_solution.hpp"

namespace thp {

struct SolverOptions {
    std::size_t mesh_points = 2001;
    int degree = 12;
    int nx = 100;
    int nt = 100;
    SppsOptions spps;
    OptimizerSettings optimizer;
};

/// Error raised by solve() that records which pipeline stage failed.
class StageError : public Error {
public:
    StageError(std::string stage, const Error& cause)
        : Error(cause.kind(), stage + ": " + cause.what()), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

/// Particular solution and formal powers of degree `degree` on [0, L].
FormalPowerTable build_basis(const ProblemSpec& spec, std::size_t mesh_points, int degree,
                             const SppsOptions& spps = {});

struct Solution {
    ProblemSpec spec;
    CollocationGrid grid;
    FormalPowerTable table;
    OptimizationResult optimization;
    double seconds = 0.0;

    const FitResult& fit() const noexcept { return optimization.fit; }
    BoundaryModel boundary() const { return {spec.l, fit().b}; }
    /// Approximate solution u_N(x, t) = sum a_n H_n(x, t).
    complex u(double x, double t) const;
};

/// Particular solution, formal powers, fixed collocation rows and the
/// warm-started outer minimisation, end to end.
Solution solve(const ProblemSpec& spec, const SolverOptions& options);

}  // namespace thp
