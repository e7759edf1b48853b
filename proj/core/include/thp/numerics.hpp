#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace thp {

using complex = std::complex<double>;

/// Equally spaced nodes on [start, end].
///
/// The node count must satisfy n >= 6 and (n - 1) % 5 == 0 so that the
/// composite six-point Newton-Cotes rule tiles the mesh without remainder.
class UniformMesh {
public:
    UniformMesh(double start, double end, std::size_t points);

    double start() const noexcept { return start_; }
    double end() const noexcept { return end_; }
    std::size_t size() const noexcept { return points_; }
    double step() const noexcept { return step_; }

    double node(std::size_t i) const noexcept {
        return i + 1 == points_ ? end_ : start_ + static_cast<double>(i) * step_;
    }
    std::vector<double> nodes() const;

    bool contains(double x) const noexcept;

    friend bool operator==(const UniformMesh&, const UniformMesh&) = default;

private:
    double start_;
    double end_;
    std::size_t points_;
    double step_;
};

/// Complex values tabulated at the nodes of a UniformMesh.
class SampledFunction {
public:
    SampledFunction(UniformMesh mesh, std::vector<complex> values);

    static SampledFunction sample(const UniformMesh& mesh,
                                  const std::function<complex(double)>& fn);
    static SampledFunction constant(const UniformMesh& mesh, complex value);

    const UniformMesh& mesh() const noexcept { return mesh_; }
    std::span<const complex> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    complex operator[](std::size_t i) const noexcept { return values_[i]; }

    /// Largest |value| over the nodes.
    double max_abs() const noexcept;

    SampledFunction& operator+=(const SampledFunction& rhs);
    SampledFunction& operator*=(complex scale);

    friend SampledFunction operator+(SampledFunction lhs, const SampledFunction& rhs) {
        return lhs += rhs;
    }
    friend SampledFunction operator*(complex scale, SampledFunction fn) { return fn *= scale; }
    /// Pointwise product; both operands must share a mesh.
    friend SampledFunction operator*(const SampledFunction& lhs, const SampledFunction& rhs);

private:
    UniformMesh mesh_;
    std::vector<complex> values_;
};

/// Running integral F(x_j) = int_{x_0}^{x_j} fn, F(x_0) = 0.
///
/// Block endpoints use the closed six-point Newton-Cotes rule; interior nodes
/// of each five-interval block integrate the block's degree-5 interpolant, so
/// the result is exact for polynomials of degree <= 5.
SampledFunction cumulative_integral(const SampledFunction& fn);

/// Weights w[j][i] with int_0^{j} L_i(s) ds = w[j][i], where L_i are the
/// Lagrange basis polynomials on nodes 0..5. Row 5 is the Newton-Cotes rule.
const std::array<std::array<double, 6>, 6>& block_integration_weights();

/// Cubic interpolating spline with not-a-knot end conditions.
class CubicSpline {
public:
    explicit CubicSpline(const SampledFunction& fn);

    complex value(double x) const;
    complex derivative(double x) const;
    complex second_derivative(double x) const;

    const UniformMesh& mesh() const noexcept { return mesh_; }

private:
    std::size_t segment(double x) const;

    UniformMesh mesh_;
    std::vector<complex> values_;
    std::vector<complex> curvature_;  // second derivative at nodes
};

using Interpolant = CubicSpline;

inline Interpolant make_interpolant(const SampledFunction& fn) { return CubicSpline(fn); }

}  // namespace thp
