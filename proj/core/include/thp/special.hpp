#pragma once

#include <span>
#include <utility>

#include "thp/problem.hpp"

namespace thp {

/// Exponential integral Ei(x) for x > 0 by its power series.
double ei(double x);

/// Inverse of Ei on a bracket where it is increasing: x with Ei(x) = y.
double ei_inv(double y, std::pair<double, double> bracket = {0.05, 1.5});

/// Problem with exact solution u = exp(-x^2/2 - t) for q(x) = x^2, l = 1,
/// T = 1, and free boundary s(t) = sqrt(2 Ei^-1(2C - 2 e^-t)).
struct ExactBenchmark {
    ProblemSpec spec;
    /// C = Ei(1/2)/2 + 1.
    double C = 0.0;

    double exact_u(double x, double t) const;
    double exact_u_x(double x, double t) const;
    double exact_s(double t) const;
    /// g3(t) = u(s(t), t) = exp(-Ei^-1(2C - 2 e^-t) - t).
    double boundary_value(double t) const;
};

/// Right end of the formal-power interval used for the benchmark.
inline constexpr double kBenchmarkL = 1.5;

/// Benchmark problem with g3 tabulated at the given collocation times.
ExactBenchmark exact_benchmark(std::span<const double> times);

}  // namespace thp
