#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "thp/numerics.hpp"

namespace thp {

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<complex(double)>;

/// [G1 u](x, 0) = (gamma11(x) + gamma12(x) d/dx) u(x, 0) = g1(x), x in [0, l].
struct InitialCondition {
    RealFunction gamma11;
    RealFunction gamma12;
    RealFunction g1;
};

/// [G2 u](0, t) = (gamma21(t) + gamma22(t) d/dx) u(0, t) = g2(t), t in [0, T].
struct FixedBoundaryCondition {
    RealFunction gamma21;
    RealFunction gamma22;
    RealFunction g2;
};

/// Values of g3 known only at discrete times (must coincide with the t grid).
struct TabulatedSeries {
    std::vector<double> times;
    std::vector<double> values;

    /// Value at a tabulated time; throws if `t` is not one of the samples.
    double at(double t) const;
};

/// u(s(t), t) = g3(t), given either as a function or as tabulated samples.
using FreeBoundaryValue = std::variant<RealFunction, TabulatedSeries>;

/// One-phase free boundary problem u_xx - q(x) u = u_t on 0 < x < s(t),
/// 0 < t < T, with s(0) = l and 0 < s <= L.
struct ProblemSpec {
    ComplexFunction potential;
    double L = 0.0;
    double l = 0.0;
    double T = 0.0;
    std::optional<InitialCondition> initial;
    std::optional<FixedBoundaryCondition> fixed;
    std::optional<FreeBoundaryValue> free_value;
    /// Stefan condition u_x(s(t), t) = -s'(t).
    bool stefan = true;

    /// Throws ErrorKind::Configuration naming the first violated invariant.
    void validate() const;

    double free_value_at(double t) const;
};

/// Ordered collocation points x in [0, l] (t = 0) and t in [0, T].
class CollocationGrid {
public:
    CollocationGrid(std::vector<double> x, std::vector<double> t);

    /// Equidistant grid with nx + 1 points on [0, l] and nt + 1 points on [0, T].
    static CollocationGrid uniform(double l, double T, int nx, int nt);

    std::span<const double> x() const noexcept { return x_; }
    std::span<const double> t() const noexcept { return t_; }

private:
    std::vector<double> x_;
    std::vector<double> t_;
};

}  // namespace thp
