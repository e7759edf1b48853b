#include "thp/heat_polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thp/error.hpp"

namespace thp {

std::int64_t heat_coeff(int n, int k) {
    if (n < 0 || n > kMaxHeatDegree) {
        std::ostringstream msg;
        msg << "heat coefficient degree " << n << " outside [0, " << kMaxHeatDegree << "]";
        throw Error(ErrorKind::Domain, msg.str());
    }
    if (k < 0 || 2 * k > n) {
        std::ostringstream msg;
        msg << "heat coefficient index k = " << k << " outside [0, " << n / 2 << "]";
        throw Error(ErrorKind::Domain, msg.str());
    }
    // n! / (n-2k)! fits in int64 for n <= 20; divide by k! afterwards.
    std::int64_t falling = 1;
    for (int j = n - 2 * k + 1; j <= n; ++j) falling *= j;
    std::int64_t kfact = 1;
    for (int j = 2; j <= k; ++j) kfact *= j;
    return falling / kfact;
}

double heat_poly(int n, double x, double t) {
    double sum = 0.0;
    double tk = 1.0;
    for (int k = 0; 2 * k <= n; ++k) {
        sum += static_cast<double>(heat_coeff(n, k)) * std::pow(x, n - 2 * k) * tk;
        tk *= t;
    }
    return sum;
}

double heat_poly_x(int n, double x, double t) {
    double sum = 0.0;
    double tk = 1.0;
    for (int k = 0; 2 * k < n; ++k) {
        const int p = n - 2 * k;
        sum += static_cast<double>(heat_coeff(n, k)) * p * std::pow(x, p - 1) * tk;
        tk *= t;
    }
    return sum;
}

complex thp_eval(const FormalPowerTable& table, int n, double x, double t) {
    complex sum = 0.0;
    double tk = 1.0;
    for (int k = 0; 2 * k <= n; ++k) {
        sum += static_cast<double>(heat_coeff(n, k)) * tk * table.phi(n - 2 * k, x);
        tk *= t;
    }
    return sum;
}

complex thp_x_deriv(const FormalPowerTable& table, int n, double x, double t) {
    complex sum = 0.0;
    double tk = 1.0;
    for (int k = 0; 2 * k <= n; ++k) {
        sum += static_cast<double>(heat_coeff(n, k)) * tk * table.phi_prime(n - 2 * k, x);
        tk *= t;
    }
    return sum;
}

complex thp_combination(const FormalPowerTable& table, std::span<const complex> coeffs, double x,
                        double t) {
    complex sum = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n] != 0.0) sum += coeffs[n] * thp_eval(table, static_cast<int>(n), x, t);
    }
    return sum;
}

double pde_residual(const FormalPowerTable& table, std::span<const complex> coeffs,
                    std::span<const std::pair<double, double>> points, double step) {
    auto u = [&](double x, double t) { return thp_combination(table, coeffs, x, t); };
    auto u_x = [&](double x, double t) {
        complex sum = 0.0;
        for (std::size_t n = 0; n < coeffs.size(); ++n)
            if (coeffs[n] != 0.0) sum += coeffs[n] * thp_x_deriv(table, static_cast<int>(n), x, t);
        return sum;
    };
    // Fourth-order central differences. u_xx differentiates the closed-form
    // u_x once instead of u twice, which keeps rounding in large H_n at O(eps/h).
    auto d1 = [step](const auto& g) {
        return (g(-2.0 * step) - 8.0 * g(-step) + 8.0 * g(step) - g(2.0 * step)) / (12.0 * step);
    };
    double worst = 0.0;
    for (const auto& [x, t] : points) {
        const complex uxx = d1([&](double d) { return u_x(x + d, t); });
        const complex ut = d1([&](double d) { return u(x, t + d); });
        worst = std::max(worst, std::abs(uxx - table.potential(x) * u(x, t) - ut));
    }
    return worst;
}

}  // namespace thp
