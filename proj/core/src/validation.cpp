#include "thp/validation.hpp"

#include <algorithm>
#include <cmath>

#include "thp/heat_polynomials.hpp"

namespace thp {

bool BenchmarkValidation::passed() const {
    return failure.empty() && !criteria.empty() &&
           std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

SolverOptions benchmark_options() {
    SolverOptions options;
    options.mesh_points = 2001;
    options.degree = 12;
    options.nx = 100;
    options.nt = 100;
    options.optimizer.order = 6;
    options.optimizer.initial = {0.1};
    return options;
}

double boundary_error(const Solution& solution, const ExactBenchmark& bench, int samples) {
    const auto boundary = solution.boundary();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = solution.spec.T * i / (samples - 1);
        worst = std::max(worst, std::abs(boundary.position(t) - bench.exact_s(t)));
    }
    return worst;
}

double solution_error(const Solution& solution, const ExactBenchmark& bench, int points) {
    const auto boundary = solution.boundary();
    double worst = 0.0;
    for (int j = 0; j < points; ++j) {
        const double t = solution.spec.T * j / (points - 1);
        const double s = boundary.position(t);
        for (int i = 0; i < points; ++i) {
            const double x = s * i / (points - 1);
            worst = std::max(worst, std::abs(solution.u(x, t) - bench.exact_u(x, t)));
        }
    }
    return worst;
}

BenchmarkValidation validate_benchmark(const SolverOptions& options) {
    BenchmarkValidation out;
    const auto grid = CollocationGrid::uniform(1.0, 1.0, options.nx, options.nt);
    out.benchmark = exact_benchmark(grid.t());
    const auto& bench = *out.benchmark;

    auto add = [&](std::string name, double measured, double threshold) {
        out.criteria.push_back({std::move(name), measured <= threshold, measured, threshold});
    };

    try {
        out.solution = solve(bench.spec, options);
    } catch (const Error& e) {
        out.failure = e.what();
        return out;
    }
    const auto& sol = *out.solution;
    const auto& a = sol.fit().a;
    auto coeff_error = [&](std::size_t n, double reference) {
        return n < a.size() ? std::abs(a[n] - reference) : std::abs(reference);
    };

    add("coefficient a0", coeff_error(0, BenchmarkReference::a0), 1e-3);
    add("coefficient a2", coeff_error(2, BenchmarkReference::a2), 1e-3);
    add("coefficient a4", coeff_error(4, BenchmarkReference::a4), 2e-3);
    add("coefficient a6", coeff_error(6, BenchmarkReference::a6), 5e-4);
    add("boundary error max|s_K - s|", boundary_error(sol, bench), 1e-2);
    add("solution error max|u_N - u| in D(s_K)", solution_error(sol, bench), 1e-2);

    static constexpr const char* kBlocks[] = {"initial condition", "fixed boundary condition",
                                             "free boundary value", "Stefan condition"};
    for (std::size_t blk = 0; blk < 4; ++blk)
        add(std::string("residual max, ") + kBlocks[blk], sol.fit().residual_max[blk], 1e-2);

    add("runtime [s]", sol.seconds, 60.0);
    return out;
}

}  // namespace thp
