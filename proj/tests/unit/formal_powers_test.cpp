#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "thp/error.hpp"
#include "thp/formal_powers.hpp"

namespace thp {
namespace {

FormalPowerTable make_table(double L, std::size_t points, std::function<complex(double)> q, int degree) {
    const auto potential = SampledFunction::sample(UniformMesh(0.0, L, points), q);
    return build_formal_powers(solve_particular(potential), potential, degree);
}

TEST(FormalPowersTest, ZeroPotentialGivesMonomials) {
    const auto table = make_table(1.0, 2001, [](double) { return complex(0.0); }, 12);
    std::mt19937_64 rng(1);
    for (double x : testing::random_uniform(rng, 50, 0.0, 1.0)) {
        for (int n = 0; n <= 12; ++n) {
            EXPECT_LT(std::abs(table.phi(n, x) - std::pow(x, n)), 1e-10) << "n=" << n;
            const double dexact = n == 0 ? 0.0 : n * std::pow(x, n - 1);
            EXPECT_LT(std::abs(table.phi_prime(n, x) - dexact), 1e-9) << "n=" << n;
        }
    }
    EXPECT_NEAR(phi_eval(table, 3, 0.5).real(), 0.125, 1e-14);
    EXPECT_NEAR(phi_prime_eval(table, 3, 0.5).real(), 0.75, 1e-13);
}

TEST(FormalPowersTest, PhiZeroIsParticularSolution) {
    const auto table = make_table(1.5, 2001, [](double x) { return complex(x * x); }, 6);
    const auto& f = table.particular().f;
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(table.phi_nodes(0)[i], f[i]);
}

TEST(FormalPowersTest, UnitPotentialGivesSinh) {
    const auto table = make_table(1.0, 2001, [](double) { return complex(1.0); }, 4);
    for (int i = 0; i <= 20; ++i) {
        const double x = i / 20.0;
        EXPECT_NEAR(table.phi(1, x).real(), std::sinh(x), 1e-8);
        EXPECT_NEAR(table.phi(0, x).real(), std::cosh(x), 1e-8);
        EXPECT_NEAR(table.phi_prime(1, x).real(), std::cosh(x), 1e-8);
    }
}

TEST(FormalPowersTest, InitialValues) {
    const auto table = make_table(1.5, 2001, [](double x) { return complex(x * x - 0.3); }, 10);
    EXPECT_LT(std::abs(table.phi(0, 0.0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(table.phi_prime(0, 0.0)), 1e-15);
    EXPECT_LT(std::abs(table.phi_prime(1, 0.0) - 1.0), 1e-14);
    for (int n = 1; n <= 10; ++n) EXPECT_LT(std::abs(table.phi(n, 0.0)), 1e-15) << n;
    for (int n = 2; n <= 10; ++n) EXPECT_LT(std::abs(table.phi_prime(n, 0.0)), 1e-15) << n;
}

TEST(FormalPowersTest, DerivativesMatchFiniteDifferences) {
    const auto table = make_table(1.5, 2001, [](double x) { return complex(x * x); }, 12);
    const double h = 1e-5;
    for (int n = 0; n <= 12; ++n) {
        for (int i = 1; i <= 100; ++i) {
            const double x = 1.45 * i / 101.0 + 0.02;
            const complex fd = (table.phi(n, x + h) - table.phi(n, x - h)) / (2 * h);
            const complex exact = table.phi_prime(n, x);
            EXPECT_LE(std::abs(fd - exact), 1e-5 * std::max(1.0, std::abs(exact))) << "n=" << n << " x=" << x;
        }
    }
}

TEST(FormalPowersTest, TransmutedRecurrence) {
    // (d^2/dx^2 - q) phi_n = n (n - 1) phi_{n-2}
    const auto q = [](double x) { return x * x + std::cos(x); };
    const auto table = make_table(1.5, 2001, [&](double x) { return complex(q(x)); }, 12);
    const double h = 1e-3;
    for (int n = 2; n <= 12; ++n) {
        double scale = 0.0;
        for (const auto& v : table.phi_nodes(n - 2).values()) scale = std::max(scale, std::abs(v));
        for (int i = 1; i < 40; ++i) {
            const double x = 1.5 * i / 40.0;
            const complex d2 = (table.phi(n, x + h) - 2.0 * table.phi(n, x) + table.phi(n, x - h)) / (h * h);
            const complex lhs = d2 - q(x) * table.phi(n, x);
            const complex rhs = static_cast<double>(n * (n - 1)) * table.phi(n - 2, x);
            EXPECT_LE(std::abs(lhs - rhs), 1e-4 * n * (n - 1) * scale) << "n=" << n << " x=" << x;
        }
    }
}

TEST(FormalPowersTest, RangeChecks) {
    const auto table = make_table(1.0, 101, [](double) { return complex(0.0); }, 3);
    EXPECT_THROW(table.phi(4, 0.5), Error);
    EXPECT_THROW(table.phi(-1, 0.5), Error);
    EXPECT_THROW(table.phi(2, 1.5), Error);
    EXPECT_THROW(table.phi_prime(1, -0.5), Error);
}

TEST(FormalPowersTest, RejectsVanishingParticularSolution) {
    const UniformMesh mesh(0.0, 1.0, 11);
    ParticularSolution ps{SampledFunction::sample(mesh, [](double x) { return complex(1.0 - x); }),
                          SampledFunction::constant(mesh, -1.0), -1.0, false,
                          SampledFunction::constant(mesh, 1.0)};
    try {
        FormalPowerTable(ps, SampledFunction::constant(mesh, 0.0), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Nonvanishing);
    }
}

}  // namespace
}  // namespace thp
