#pragma once

// Reference computations that share no code with the library.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace thp::testing {

/// Classical RK4 for y'' = q(x) y, y(0) = y0, y'(0) = dy0, integrated to x_end.
inline double rk4_second_order(const std::function<double(double)>& q, double y0, double dy0,
                               double x_end, double step) {
    const auto steps = static_cast<long>(std::llround(x_end / step));
    const double h = x_end / static_cast<double>(steps);
    double x = 0.0, y = y0, v = dy0;
    for (long i = 0; i < steps; ++i) {
        const double k1y = v, k1v = q(x) * y;
        const double k2y = v + 0.5 * h * k1v, k2v = q(x + 0.5 * h) * (y + 0.5 * h * k1y);
        const double k3y = v + 0.5 * h * k2v, k3v = q(x + 0.5 * h) * (y + 0.5 * h * k2y);
        const double k4y = v + h * k3v, k4v = q(x + h) * (y + h * k3y);
        y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
        v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
        x += h;
    }
    return y;
}

/// Ei(x), x > 0, by the power series in long double.
inline long double ei_series_long(long double x) {
    constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
    long double sum = 0.0L, term = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= x / k;
        sum += term / k;
    }
    return kEulerGamma + std::log(x) + sum;
}

/// Hermite-style expansion of h_n via the recurrence
/// h_{n+1} = x h_n + 2 n t h_{n-1}.
inline double heat_poly_recurrence(int n, double x, double t) {
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int k = 1; k < n; ++k) {
        const double next = x * cur + 2.0 * k * t * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

inline std::vector<double> random_uniform(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out(n);
    for (auto& v : out) v = dist(rng);
    return out;
}

}  // namespace thp::testing
