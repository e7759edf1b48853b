#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "thp/formal_powers.hpp"

namespace thp {

/// Largest degree for which heat coefficients are computed exactly.
inline constexpr int kMaxHeatDegree = 20;

/// c_k^n = n! / ((n - 2k)! k!), exact for n <= 20.
std::int64_t heat_coeff(int n, int k);

/// Classical heat polynomial h_n(x, t) = sum_k c_k^n x^(n-2k) t^k.
double heat_poly(int n, double x, double t);
/// d/dx h_n(x, t).
double heat_poly_x(int n, double x, double t);

/// Transmuted heat polynomial H_n(x, t) = sum_k c_k^n phi_{n-2k}(x) t^k.
complex thp_eval(const FormalPowerTable& table, int n, double x, double t);
/// d/dx H_n(x, t), with phi replaced by phi'.
complex thp_x_deriv(const FormalPowerTable& table, int n, double x, double t);

/// u(x, t) = sum_n a_n H_n(x, t).
complex thp_combination(const FormalPowerTable& table, std::span<const complex> coeffs, double x,
                        double t);

/// Max over the sample points of |u_xx - q u - u_t| for u = sum_n a_n H_n,
/// with derivatives by fourth-order central differences of the given step
/// (u_xx from the closed-form x-derivative).
double pde_residual(const FormalPowerTable& table, std::span<const complex> coeffs,
                    std::span<const std::pair<double, double>> points, double step = 1e-4);

}  // namespace thp
