#include "thp/special.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "thp/error.hpp"

namespace thp {

double ei(double x) {
    if (!(x > 0.0)) {
        std::ostringstream msg;
        msg << "Ei(" << x << "): only the positive branch is supported";
        throw Error(ErrorKind::Domain, msg.str());
    }
    // Ei(x) = gamma + ln x + sum_{k>=1} x^k / (k k!)
    double sum = 0.0;
    double power_over_fact = 1.0;  // x^k / k!
    for (int k = 1; k < 500; ++k) {
        power_over_fact *= x / k;
        const double term = power_over_fact / k;
        sum += term;
        if (term < 1e-16 * std::abs(sum)) break;
    }
    return std::numbers::egamma + std::log(x) + sum;
}

double ei_inv(double y, std::pair<double, double> bracket) {
    auto [lo, hi] = bracket;
    const double ylo = ei(lo);
    const double yhi = ei(hi);
    if (!(y >= ylo && y <= yhi)) {
        std::ostringstream msg;
        msg << "Ei^-1(" << y << "): value outside [" << ylo << ", " << yhi << "] for bracket [" << lo
            << ", " << hi << "]";
        throw Error(ErrorKind::Domain, msg.str());
    }
    // Bisection to a narrow bracket, then Newton with Ei'(x) = e^x / x.
    const auto [outer_lo, outer_hi] = bracket;
    for (int i = 0; i < 40; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ei(mid) < y ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 20; ++i) {
        const double residual = ei(x) - y;
        if (std::abs(residual) <= 1e-15 * std::max(1.0, std::abs(y))) break;
        const double next = x - residual * x / std::exp(x);
        if (!(next >= outer_lo && next <= outer_hi)) break;
        x = next;
    }
    return x;
}

double ExactBenchmark::exact_u(double x, double t) const { return std::exp(-0.5 * x * x - t); }

double ExactBenchmark::exact_u_x(double x, double t) const { return -x * exact_u(x, t); }

double ExactBenchmark::exact_s(double t) const {
    return std::sqrt(2.0 * ei_inv(2.0 * C - 2.0 * std::exp(-t)));
}

double ExactBenchmark::boundary_value(double t) const {
    return std::exp(-ei_inv(2.0 * C - 2.0 * std::exp(-t)) - t);
}

ExactBenchmark exact_benchmark(std::span<const double> times) {
    ExactBenchmark bench;
    bench.C = 0.5 * ei(0.5) + 1.0;

    auto& spec = bench.spec;
    spec.potential = [](double x) { return complex(x * x); };
    spec.L = kBenchmarkL;
    spec.l = 1.0;
    spec.T = 1.0;
    spec.initial = InitialCondition{
        [](double) { return 1.0; },
        [](double) { return 0.0; },
        [](double x) { return std::exp(-0.5 * x * x); },
    };
    spec.fixed = FixedBoundaryCondition{
        [](double) { return 0.0; },
        [](double) { return 1.0; },
        [](double) { return 0.0; },
    };
    TabulatedSeries g3;
    g3.times.assign(times.begin(), times.end());
    for (double t : times) g3.values.push_back(bench.boundary_value(t));
    spec.free_value = std::move(g3);
    spec.stefan = true;
    return bench;
}

}  // namespace thp
