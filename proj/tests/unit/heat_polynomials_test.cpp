#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "thp/error.hpp"
#include "thp/heat_polynomials.hpp"

namespace thp {
namespace {

FormalPowerTable make_table(double L, std::function<complex(double)> q, int degree) {
    const auto potential = SampledFunction::sample(UniformMesh(0.0, L, 2001), q);
    return build_formal_powers(solve_particular(potential), potential, degree);
}

std::vector<complex> unit(int n, int size) {
    std::vector<complex> a(static_cast<std::size_t>(size), 0.0);
    a[static_cast<std::size_t>(n)] = 1.0;
    return a;
}

TEST(HeatPolynomialsTest, Coefficients) {
    EXPECT_EQ(heat_coeff(0, 0), 1);
    EXPECT_EQ(heat_coeff(2, 1), 2);
    EXPECT_EQ(heat_coeff(4, 1), 12);
    EXPECT_EQ(heat_coeff(4, 2), 12);
    EXPECT_EQ(heat_coeff(6, 3), 120);
    EXPECT_EQ(heat_coeff(20, 10), 670442572800);
    EXPECT_EQ(heat_coeff(20, 0), 1);
}

TEST(HeatPolynomialsTest, CoefficientRangeChecks) {
    EXPECT_THROW(heat_coeff(21, 0), Error);
    EXPECT_THROW(heat_coeff(-1, 0), Error);
    EXPECT_THROW(heat_coeff(4, 3), Error);
    EXPECT_THROW(heat_coeff(4, -1), Error);
}

TEST(HeatPolynomialsTest, ClassicalExamples) {
    EXPECT_DOUBLE_EQ(heat_poly(0, 0.3, 0.7), 1.0);
    EXPECT_DOUBLE_EQ(heat_poly(1, 0.3, 0.7), 0.3);
    EXPECT_DOUBLE_EQ(heat_poly(2, 0.5, 0.25), 0.75);
    EXPECT_DOUBLE_EQ(heat_poly(3, 1.0, 1.0), 7.0);
    EXPECT_DOUBLE_EQ(heat_poly(4, 1.0, 1.0), 25.0);
    EXPECT_DOUBLE_EQ(heat_poly_x(4, 1.0, 1.0), 28.0);
}

TEST(HeatPolynomialsTest, MatchesRecurrence) {
    std::mt19937_64 rng(7);
    const auto xs = testing::random_uniform(rng, 40, -1.5, 1.5);
    const auto ts = testing::random_uniform(rng, 40, 0.0, 1.0);
    for (int n = 0; n <= kMaxHeatDegree; ++n)
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double ref = testing::heat_poly_recurrence(n, xs[i], ts[i]);
            EXPECT_NEAR(heat_poly(n, xs[i], ts[i]), ref, 1e-12 * std::max(1.0, std::abs(ref))) << n;
        }
}

TEST(HeatPolynomialsTest, ClassicalPolynomialsSolveHeatEquation) {
    const double h = 1e-4;
    for (int n = 0; n <= 10; ++n)
        for (double x : {0.2, 0.7, 1.1})
            for (double t : {0.1, 0.6}) {
                const double uxx = (heat_poly_x(n, x + h, t) - heat_poly_x(n, x - h, t)) / (2 * h);
                const double ut = (heat_poly(n, x, t + h) - heat_poly(n, x, t - h)) / (2 * h);
                EXPECT_NEAR(uxx, ut, 1e-5 * std::max(1.0, std::abs(ut))) << n;
            }
}

TEST(HeatPolynomialsTest, ZeroPotentialReducesToClassical) {
    // Off-node spline error in phi_8 is amplified by c_2^12 = 5940, so the
    // absolute 1e-9 bound needs a finer mesh than the 2001-node default.
    const auto potential = SampledFunction::constant(UniformMesh(0.0, 1.0, 8001), 0.0);
    const auto table = build_formal_powers(solve_particular(potential), potential, 12);
    std::mt19937_64 rng(19);
    const auto xs = testing::random_uniform(rng, 200, 0.0, 1.0);
    const auto ts = testing::random_uniform(rng, 200, 0.0, 1.0);
    for (int n = 0; n <= 12; ++n)
        for (std::size_t i = 0; i < xs.size(); ++i)
            EXPECT_LE(std::abs(thp_eval(table, n, xs[i], ts[i]) - heat_poly(n, xs[i], ts[i])), 1e-9) << n;
}

TEST(HeatPolynomialsTest, ZeroPotentialReductionOnGrid) {
    const auto table = make_table(1.0, [](double) { return complex(0.0); }, 12);
    for (int n = 0; n <= 12; ++n)
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j) {
                const double x = i / 19.0, t = j / 19.0;
                const double h = heat_poly(n, x, t);
                EXPECT_LE(std::abs(thp_eval(table, n, x, t) - h), 1e-8 * (1.0 + std::abs(h))) << n;
                const double hx = heat_poly_x(n, x, t);
                EXPECT_LE(std::abs(thp_x_deriv(table, n, x, t) - hx), 1e-8 * (1.0 + std::abs(hx))) << n;
            }
}

TEST(HeatPolynomialsTest, LowestDegreeIsParticularSolution) {
    const auto table = make_table(1.5, [](double x) { return complex(x * x); }, 4);
    for (double x : {0.0, 0.4, 1.2})
        for (double t : {0.0, 0.5}) EXPECT_EQ(thp_eval(table, 0, x, t), table.phi(0, x));
}

TEST(HeatPolynomialsTest, UnitPotentialSecondDegree) {
    // H_2 = phi_2 + 2 t phi_0 with phi_0 = cosh x.
    const auto table = make_table(1.0, [](double) { return complex(1.0); }, 2);
    for (double x : {0.3, 0.8})
        for (double t : {0.2, 0.9}) {
            const complex expected = table.phi(2, x) + 2.0 * t * std::cosh(x);
            EXPECT_LE(std::abs(thp_eval(table, 2, x, t) - expected), 1e-8);
        }
    // phi_2'' - phi_2 = 2 cosh x with zero data gives phi_2 = x sinh x.
    for (double x : {0.1, 0.5, 0.95}) EXPECT_NEAR(table.phi(2, x).real(), x * std::sinh(x), 1e-8);
}

TEST(HeatPolynomialsTest, CombinationIsLinear) {
    const auto table = make_table(1.5, [](double x) { return complex(x * x); }, 6);
    const std::vector<complex> a{1.0, 0.0, -0.5, 0.0, 0.25, 0.0, 0.1};
    const double x = 0.7, t = 0.4;
    complex expected = 0.0;
    for (int n = 0; n <= 6; ++n) expected += a[static_cast<std::size_t>(n)] * thp_eval(table, n, x, t);
    EXPECT_LE(std::abs(thp_combination(table, a, x, t) - expected), 1e-14);
}

TEST(HeatPolynomialsTest, BasisSolvesTransmutedEquation) {
    const auto table = make_table(1.5, [](double x) { return complex(x * x); }, 12);
    std::vector<std::pair<double, double>> points;
    for (int i = 1; i < 10; ++i)
        for (int j = 1; j < 10; ++j) points.emplace_back(1.4 * i / 10.0, j / 10.0);
    for (int n = 0; n <= 12; ++n) {
        const double scale = 1.0 + table.phi_nodes(n).max_abs();
        EXPECT_LE(pde_residual(table, unit(n, 13), points), 1e-3 * scale) << n;
    }
}

TEST(HeatPolynomialsTest, ResidualExamples) {
    const std::vector<std::pair<double, double>> points{{0.2, 0.1}, {0.6, 0.5}, {1.3, 0.9}};
    const auto bench = make_table(1.5, [](double x) { return complex(x * x); }, 2);
    EXPECT_LE(pde_residual(bench, unit(0, 3), points), 1e-4 * bench.phi_nodes(0).max_abs());
    const auto zero = make_table(1.5, [](double) { return complex(0.0); }, 2);
    EXPECT_LE(pde_residual(zero, unit(2, 3), points), 1e-5);
}

TEST(HeatPolynomialsTest, ResidualDetectsNonSolutions) {
    // Basis built for q = 0 but checked against q = 1: H_0 = 1 leaves residual -1.
    const UniformMesh mesh(0.0, 1.0, 2001);
    const auto zero = SampledFunction::constant(mesh, 0.0);
    const FormalPowerTable mismatched(solve_particular(zero), SampledFunction::constant(mesh, 1.0), 2);
    const std::vector<std::pair<double, double>> points{{0.5, 0.5}};
    EXPECT_NEAR(pde_residual(mismatched, unit(0, 3), points), 1.0, 1e-6);
    EXPECT_NEAR(pde_residual(mismatched, unit(2, 3), points), 0.25 + 1.0, 1e-6);
}

TEST(HeatPolynomialsTest, DegreeInTime) {
    // H_n is a polynomial of degree floor(n/2) in t: the floor(n/2)+1 difference vanishes.
    const auto table = make_table(1.5, [](double x) { return complex(x * x); }, 9);
    for (int n = 0; n <= 9; ++n) {
        const int m = n / 2 + 1;
        complex diff = 0.0;
        double binom = 1.0;
        for (int j = 0; j <= m; ++j) {
            diff += ((m - j) % 2 == 0 ? 1.0 : -1.0) * binom * thp_eval(table, n, 0.8, 0.1 * j);
            binom = binom * (m - j) / (j + 1);
        }
        EXPECT_LE(std::abs(diff), 1e-9) << n;
    }
}

TEST(HeatPolynomialsTest, DegreeGuards) {
    const auto table = make_table(1.0, [](double) { return complex(0.0); }, 3);
    EXPECT_THROW(thp_eval(table, 4, 0.5, 0.1), Error);
    EXPECT_THROW(heat_poly(21, 0.5, 0.1), Error);
}

}  // namespace
}  // namespace thp
