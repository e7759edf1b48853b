#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "thp/error.hpp"
#include "thp/numerics.hpp"

namespace thp {
namespace {

TEST(UniformMeshTest, RejectsNodeCountsThatDoNotTile) {
    EXPECT_THROW(UniformMesh(0.0, 1.0, 10), Error);
    EXPECT_THROW(UniformMesh(0.0, 1.0, 1), Error);
    EXPECT_THROW(UniformMesh(1.0, 0.0, 11), Error);
    EXPECT_NO_THROW(UniformMesh(0.0, 1.0, 6));
    try {
        UniformMesh(0.0, 1.0, 12);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Configuration);
    }
}

TEST(UniformMeshTest, LastNodeIsExactEnd) {
    const UniformMesh mesh(0.0, 0.3, 2001);
    EXPECT_EQ(mesh.node(2000), 0.3);
    EXPECT_DOUBLE_EQ(mesh.step(), 0.3 / 2000);
}

TEST(BlockWeightsTest, LastRowIsSixPointNewtonCotes) {
    const auto& w = block_integration_weights();
    const double expected[6] = {19, 75, 50, 50, 75, 19};
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(w[5][i], 5.0 * expected[i] / 288.0, 1e-14);
    for (int j = 0; j < 6; ++j) {
        double sum = 0.0;
        for (double v : w[j]) sum += v;
        EXPECT_NEAR(sum, j, 1e-13);
    }
}

TEST(CumulativeIntegralTest, ConstantGivesIdentity) {
    const UniformMesh mesh(0.0, 1.0, 11);
    const auto F = cumulative_integral(SampledFunction::constant(mesh, 1.0));
    EXPECT_EQ(F[0], complex(0.0));
    for (std::size_t j = 0; j < mesh.size(); ++j) EXPECT_NEAR(F[j].real(), mesh.node(j), 1e-15);
}

TEST(CumulativeIntegralTest, QuinticIsExact) {
    const UniformMesh mesh(0.0, 1.0, 11);
    const auto F = cumulative_integral(
        SampledFunction::sample(mesh, [](double x) { return complex(std::pow(x, 5)); }));
    EXPECT_NEAR(F[10].real(), 1.0 / 6.0, 1e-15);
}

TEST(CumulativeIntegralTest, DegreeFiveExactnessAtEveryNode) {
    const UniformMesh mesh(0.2, 1.7, 31);
    for (int k = 0; k <= 5; ++k) {
        const auto F = cumulative_integral(
            SampledFunction::sample(mesh, [k](double x) { return complex(std::pow(x, k)); }));
        for (std::size_t j = 0; j < mesh.size(); ++j) {
            const double x = mesh.node(j);
            const double exact = (std::pow(x, k + 1) - std::pow(0.2, k + 1)) / (k + 1);
            EXPECT_NEAR(F[j].real(), exact, 1e-12 * std::max(1.0, std::abs(exact))) << "k=" << k << " j=" << j;
        }
    }
}

TEST(CumulativeIntegralTest, CosineOnQuarterPeriod) {
    const UniformMesh mesh(0.0, std::numbers::pi / 2, 101);
    const auto F = cumulative_integral(
        SampledFunction::sample(mesh, [](double x) { return complex(std::cos(x)); }));
    EXPECT_NEAR(F[100].real(), 1.0, 1e-10);
}

TEST(CumulativeIntegralTest, IsLinear) {
    std::mt19937_64 rng(7);
    const UniformMesh mesh(0.0, 2.0, 51);
    const auto re = testing::random_uniform(rng, 4 * mesh.size() + 4, -1.0, 1.0);
    std::vector<complex> u(mesh.size()), v(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        u[i] = {re[4 * i], re[4 * i + 1]};
        v[i] = {re[4 * i + 2], re[4 * i + 3]};
    }
    const complex a(re[4 * mesh.size()], re[4 * mesh.size() + 1]);
    const complex b(re[4 * mesh.size() + 2], re[4 * mesh.size() + 3]);
    const SampledFunction U(mesh, u), V(mesh, v);
    const auto lhs = cumulative_integral(a * U + b * V);
    const auto rhs = a * cumulative_integral(U) + b * cumulative_integral(V);
    for (std::size_t i = 0; i < mesh.size(); ++i) EXPECT_LT(std::abs(lhs[i] - rhs[i]), 1e-14);
}

TEST(CumulativeIntegralTest, ConvergesAtSixthOrder) {
    auto error = [](std::size_t points) {
        const UniformMesh mesh(0.0, 1.0, points);
        const auto F = cumulative_integral(
            SampledFunction::sample(mesh, [](double x) { return complex(std::exp(x)); }));
        return std::abs(F[points - 1].real() - (std::numbers::e - 1.0));
    };
    const double coarse = error(6);
    const double fine = error(11);
    EXPECT_GE(coarse / fine, 32.0);
}

TEST(CubicSplineTest, ReproducesCubics) {
    const UniformMesh mesh(0.0, 2.0, 21);
    const auto p = [](double x) { return x * x * x - 2.0 * x; };
    const CubicSpline spline(SampledFunction::sample(mesh, [&](double x) { return complex(p(x)); }));
    EXPECT_NEAR(spline.value(0.37).real(), p(0.37), 1e-13);
    EXPECT_NEAR(spline.derivative(0.37).real(), 3 * 0.37 * 0.37 - 2.0, 1e-12);
    EXPECT_NEAR(spline.second_derivative(1.91).real(), 6 * 1.91, 1e-10);
    std::mt19937_64 rng(3);
    for (double x : testing::random_uniform(rng, 200, 0.0, 2.0))
        EXPECT_NEAR(spline.value(x).real(), p(x), 1e-12);
}

TEST(CubicSplineTest, InterpolatesNodesAndHandlesConstants) {
    const UniformMesh mesh(-1.0, 1.0, 16);
    const auto sf = SampledFunction::sample(mesh, [](double x) { return complex(std::sin(3 * x), x); });
    const CubicSpline spline(sf);
    for (std::size_t i = 0; i < mesh.size(); ++i) EXPECT_LT(std::abs(spline.value(mesh.node(i)) - sf[i]), 1e-14);

    const CubicSpline flat(SampledFunction::constant(mesh, 5.0));
    EXPECT_LT(std::abs(flat.derivative(0.123)), 1e-13);
    EXPECT_LT(std::abs(flat.value(-0.77) - 5.0), 1e-14);
}

TEST(CubicSplineTest, RejectsEvaluationOutsideMesh) {
    const UniformMesh mesh(0.0, 1.0, 6);
    const CubicSpline spline(SampledFunction::constant(mesh, 1.0));
    EXPECT_THROW(spline.value(1.01), Error);
    EXPECT_THROW(spline.derivative(-0.01), Error);
    try {
        spline.value(2.0);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Domain);
    }
}

TEST(CubicSplineTest, QuarticErrorDecreasesAtFourthOrder) {
    const auto p = [](double x) { return x * x * x * x - x; };
    auto max_error = [&](std::size_t points) {
        const UniformMesh mesh(0.0, 1.0, points);
        const CubicSpline spline(SampledFunction::sample(mesh, [&](double x) { return complex(p(x)); }));
        std::mt19937_64 rng(11);
        double worst = 0.0;
        for (double x : testing::random_uniform(rng, 1000, 0.0, 1.0))
            worst = std::max(worst, std::abs(spline.value(x).real() - p(x)));
        return worst;
    };
    const double ratio = max_error(21) / max_error(41);
    EXPECT_GT(ratio, 12.0);  // 2^4 = 16 asymptotically
}

}  // namespace
}  // namespace thp
