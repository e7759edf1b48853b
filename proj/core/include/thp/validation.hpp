#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thp/solver.hpp"
#include "thp/special.hpp"

namespace thp {

struct CriterionResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
};

/// Reference values for the benchmark fit at N = 12, K = 6.
struct BenchmarkReference {
    static constexpr double a0 = 1.00000201;
    static constexpr double a2 = -0.50002066;
    static constexpr double a4 = 1.0 / 24.0;
    static constexpr double a6 = -1.0 / 720.0;
    static constexpr double boundary[6] = {0.60657885, -0.30458770, 0.03631846,
                                           0.06761711, -0.05111378, 0.01270860};
};

struct BenchmarkValidation {
    std::optional<ExactBenchmark> benchmark;
    std::optional<Solution> solution;
    std::vector<CriterionResult> criteria;
    /// Set when the solve itself failed.
    std::string failure;

    bool passed() const;
};

/// Default solver options for the exact benchmark (2001-node mesh, N = 12,
/// 101-point grids, K = 6).
SolverOptions benchmark_options();

/// Solves the exact benchmark and checks coefficients, boundary and solution
/// accuracy, collocation residuals and runtime against fixed tolerances.
BenchmarkValidation validate_benchmark(const SolverOptions& options = benchmark_options());

/// Max over `samples` equidistant times in [0, T] of |s_K(t) - s(t)|.
double boundary_error(const Solution& solution, const ExactBenchmark& bench, int samples = 1001);
/// Max over a points x points grid covering D(s_K) of |u_N - u|.
double solution_error(const Solution& solution, const ExactBenchmark& bench, int points = 50);

}  // namespace thp
