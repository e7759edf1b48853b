#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "thp/error.hpp"
#include "thp/special.hpp"

namespace thp {
namespace {

TEST(SpecialTest, EiMatchesReference) {
    EXPECT_NEAR(ei(0.5), 0.45421990486317358, 1e-14);
    for (double x : {0.05, 0.1, 0.3, 0.7, 1.0, 1.5, 3.0})
        EXPECT_NEAR(ei(x), static_cast<double>(testing::ei_series_long(x)), 1e-9) << x;
}

TEST(SpecialTest, EiIsIncreasing) {
    double prev = ei(0.05);
    for (int i = 1; i <= 100; ++i) {
        const double next = ei(0.05 + 1.45 * i / 100.0);
        EXPECT_GT(next, prev);
        prev = next;
    }
}

TEST(SpecialTest, EiRejectsNonPositive) {
    EXPECT_THROW(ei(0.0), Error);
    EXPECT_THROW(ei(-1.0), Error);
}

TEST(SpecialTest, InverseRoundTrip) {
    for (int i = 0; i <= 90; ++i) {
        const double x = 0.3 + 0.01 * i;
        EXPECT_NEAR(ei_inv(ei(x)), x, 1e-8) << x;
    }
    EXPECT_THROW(ei_inv(10.0), Error);
}

TEST(SpecialTest, BenchmarkConstant) {
    const std::vector<double> times{0.0, 1.0};
    const auto bench = exact_benchmark(times);
    EXPECT_NEAR(bench.C, 1.2271099524315868, 1e-14);
    EXPECT_NEAR(bench.C, 1.2271, 5e-5);
    EXPECT_NEAR(ei_inv(2.0 * bench.C - 2.0), 0.5, 1e-12);
    EXPECT_NEAR(bench.exact_s(0.0), 1.0, 1e-12);
    EXPECT_NEAR(bench.exact_s(1.0), 1.3675224442452501, 1e-10);
}

TEST(SpecialTest, BenchmarkSatisfiesStefanCondition) {
    const std::vector<double> times{0.0};
    const auto bench = exact_benchmark(times);
    const double h = 1e-6;
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        const double lo = std::max(0.0, t - h), hi = std::min(1.0, t + h);
        const double s_dot = (bench.exact_s(hi) - bench.exact_s(lo)) / (hi - lo);
        EXPECT_NEAR(bench.exact_u_x(bench.exact_s(t), t), -s_dot, 1e-6) << t;
    }
}

TEST(SpecialTest, BenchmarkSolvesEquation) {
    const std::vector<double> times{0.0};
    const auto bench = exact_benchmark(times);
    const double h = 1e-4;
    for (double x : {0.1, 0.6, 1.2})
        for (double t : {0.2, 0.8}) {
            const double uxx = (bench.exact_u(x + h, t) - 2 * bench.exact_u(x, t) + bench.exact_u(x - h, t)) / (h * h);
            const double ut = (bench.exact_u(x, t + h) - bench.exact_u(x, t - h)) / (2 * h);
            EXPECT_NEAR(uxx - x * x * bench.exact_u(x, t), ut, 1e-6);
        }
}

TEST(SpecialTest, BenchmarkDataIsConsistent) {
    std::vector<double> times;
    for (int i = 0; i <= 100; ++i) times.push_back(i / 100.0);
    const auto bench = exact_benchmark(times);
    EXPECT_NO_THROW(bench.spec.validate());
    for (double t : times) {
        EXPECT_NEAR(bench.spec.free_value_at(t), bench.exact_u(bench.exact_s(t), t), 1e-13);
        EXPECT_EQ(bench.spec.fixed->g2(t), bench.exact_u_x(0.0, t));
    }
    for (double x : {0.0, 0.5, 1.0}) EXPECT_NEAR(bench.spec.initial->g1(x), bench.exact_u(x, 0.0), 1e-15);
    EXPECT_THROW(bench.spec.free_value_at(0.005), Error);
}

}  // namespace
}  // namespace thp
