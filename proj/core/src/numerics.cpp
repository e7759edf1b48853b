#include "thp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thp/error.hpp"

namespace thp {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Configuration: return "configuration error";
        case ErrorKind::Domain: return "domain error";
        case ErrorKind::Syntax: return "syntax error";
        case ErrorKind::Evaluation: return "evaluation error";
        case ErrorKind::Convergence: return "convergence error";
        case ErrorKind::Nonvanishing: return "nonvanishing-solution error";
        case ErrorKind::Degenerate: return "degenerate system";
        case ErrorKind::Constraint: return "constraint violation";
        case ErrorKind::Optimization: return "optimization failure";
    }
    return "error";
}

UniformMesh::UniformMesh(double start, double end, std::size_t points)
    : start_(start), end_(end), points_(points), step_(0.0) {
    if (!(start < end) || !std::isfinite(start) || !std::isfinite(end)) {
        throw Error(ErrorKind::Configuration, "mesh requires finite start < end");
    }
    if (points < 6 || (points - 1) % 5 != 0) {
        std::ostringstream msg;
        msg << "mesh node count " << points
            << " invalid: need at least 6 nodes with (nodes - 1) divisible by 5";
        throw Error(ErrorKind::Configuration, msg.str());
    }
    step_ = (end - start) / static_cast<double>(points - 1);
}

std::vector<double> UniformMesh::nodes() const {
    std::vector<double> xs(points_);
    for (std::size_t i = 0; i < points_; ++i) xs[i] = node(i);
    return xs;
}

bool UniformMesh::contains(double x) const noexcept {
    const double slack = 1e-12 * (end_ - start_);
    return x >= start_ - slack && x <= end_ + slack;
}

SampledFunction::SampledFunction(UniformMesh mesh, std::vector<complex> values)
    : mesh_(mesh), values_(std::move(values)) {
    if (values_.size() != mesh_.size()) {
        throw Error(ErrorKind::Configuration, "sampled values do not match mesh size");
    }
}

SampledFunction SampledFunction::sample(const UniformMesh& mesh,
                                        const std::function<complex(double)>& fn) {
    std::vector<complex> values(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) values[i] = fn(mesh.node(i));
    return {mesh, std::move(values)};
}

SampledFunction SampledFunction::constant(const UniformMesh& mesh, complex value) {
    return {mesh, std::vector<complex>(mesh.size(), value)};
}

double SampledFunction::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& rhs) {
    if (!(mesh_ == rhs.mesh_)) throw Error(ErrorKind::Configuration, "mesh mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
    return *this;
}

SampledFunction& SampledFunction::operator*=(complex scale) {
    for (auto& v : values_) v *= scale;
    return *this;
}

SampledFunction operator*(const SampledFunction& lhs, const SampledFunction& rhs) {
    if (!(lhs.mesh_ == rhs.mesh_)) throw Error(ErrorKind::Configuration, "mesh mismatch");
    std::vector<complex> out(lhs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.values_[i] * rhs.values_[i];
    return {lhs.mesh_, std::move(out)};
}

namespace {

// Integrals of the Lagrange basis on nodes 0..5 over [0, j], times 1440.
// Exact integers, so the rows sum to exactly j after scaling.
constexpr int kBlockWeights1440[6][6] = {
    {0, 0, 0, 0, 0, 0},
    {475, 1427, -798, 482, -173, 27},
    {448, 2064, 224, 224, -96, 16},
    {459, 1971, 1026, 1026, -189, 27},
    {448, 2048, 768, 2048, 448, 0},
    {475, 1875, 1250, 1250, 1875, 475},
};

std::array<std::array<double, 6>, 6> compute_block_weights() {
    std::array<std::array<double, 6>, 6> w{};
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) w[j][i] = kBlockWeights1440[j][i] / 1440.0;
    return w;
}

}  // namespace

const std::array<std::array<double, 6>, 6>& block_integration_weights() {
    static const auto weights = compute_block_weights();
    return weights;
}

SampledFunction cumulative_integral(const SampledFunction& fn) {
    const auto& mesh = fn.mesh();
    const std::size_t n = mesh.size();
    if ((n - 1) % 5 != 0) {
        throw Error(ErrorKind::Configuration, "cumulative integral needs (nodes - 1) divisible by 5");
    }
    const auto& w = block_integration_weights();
    const double h = mesh.step();
    const auto v = fn.values();

    std::vector<complex> out(n);
    out[0] = 0.0;
    // Block totals are accumulated with Kahan compensation, so rounding does
    // not grow with the number of blocks.
    complex base = 0.0;
    complex carry = 0.0;
    for (std::size_t b = 0; b + 1 < n; b += 5) {
        complex block[6];
        for (std::size_t j = 1; j <= 5; ++j) {
            complex acc = 0.0;
            for (std::size_t i = 0; i < 6; ++i) acc += w[j][i] * v[b + i];
            block[j] = h * acc;
            out[b + j] = base + (block[j] - carry);
        }
        const complex y = block[5] - carry;
        const complex sum = base + y;
        carry = (sum - base) - y;
        base = sum;
        out[b + 5] = base;
    }
    return {mesh, std::move(out)};
}

CubicSpline::CubicSpline(const SampledFunction& fn)
    : mesh_(fn.mesh()), values_(fn.values().begin(), fn.values().end()),
      curvature_(fn.size()) {
    const std::size_t n = values_.size();
    const double h = mesh_.step();
    const auto& y = values_;
    auto& m = curvature_;

    // Interior continuity rows: m[i-1] + 4 m[i] + m[i+1] = r[i].
    std::vector<complex> r(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) r[i] = 6.0 * (y[i - 1] - 2.0 * y[i] + y[i + 1]) / (h * h);

    // Not-a-knot on a uniform mesh gives m[0] = 2 m[1] - m[2]; substituting
    // into row 1 leaves 6 m[1] = r[1]. Symmetrically at the right end.
    m[1] = r[1] / 6.0;
    m[n - 2] = r[n - 2] / 6.0;

    // Tridiagonal solve for m[2..n-3] with known neighbours m[1], m[n-2].
    if (n > 4) {
        const std::size_t first = 2;
        const std::size_t last = n - 3;
        const std::size_t count = last - first + 1;
        std::vector<double> c(count);
        std::vector<complex> d(count);
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t i = first + k;
            complex rhs = r[i];
            if (i == first) rhs -= m[1];
            if (i == last) rhs -= m[n - 2];
            if (k == 0) {
                c[k] = 1.0 / 4.0;
                d[k] = rhs / 4.0;
            } else {
                const double denom = 4.0 - c[k - 1];
                c[k] = 1.0 / denom;
                d[k] = (rhs - d[k - 1]) / denom;
            }
        }
        m[last] = d[count - 1];
        for (std::size_t k = count - 1; k-- > 0;) m[first + k] = d[k] - c[k] * m[first + k + 1];
    }
    m[0] = 2.0 * m[1] - m[2];
    m[n - 1] = 2.0 * m[n - 2] - m[n - 3];
}

std::size_t CubicSpline::segment(double x) const {
    if (!mesh_.contains(x) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << "spline evaluation at " << x << " outside [" << mesh_.start() << ", " << mesh_.end()
            << "]";
        throw Error(ErrorKind::Domain, msg.str());
    }
    const double pos = (x - mesh_.start()) / mesh_.step();
    const auto last = mesh_.size() - 2;
    if (pos <= 0.0) return 0;
    return std::min(static_cast<std::size_t>(pos), last);
}

complex CubicSpline::value(double x) const {
    const std::size_t i = segment(x);
    // Local width, so that a + b == h up to one rounding even at the last node.
    const double h = mesh_.node(i + 1) - mesh_.node(i);
    const double a = mesh_.node(i + 1) - x;
    const double b = x - mesh_.node(i);
    const auto& m = curvature_;
    return (m[i] * (a * a * a) + m[i + 1] * (b * b * b)) / (6.0 * h) +
           (values_[i] - m[i] * (h * h / 6.0)) * (a / h) +
           (values_[i + 1] - m[i + 1] * (h * h / 6.0)) * (b / h);
}

complex CubicSpline::derivative(double x) const {
    const std::size_t i = segment(x);
    const double h = mesh_.node(i + 1) - mesh_.node(i);
    const double a = mesh_.node(i + 1) - x;
    const double b = x - mesh_.node(i);
    const auto& m = curvature_;
    return (m[i + 1] * (b * b) - m[i] * (a * a)) / (2.0 * h) +
           (values_[i + 1] - values_[i]) / h - (m[i + 1] - m[i]) * (h / 6.0);
}

complex CubicSpline::second_derivative(double x) const {
    const std::size_t i = segment(x);
    const double h = mesh_.node(i + 1) - mesh_.node(i);
    const double a = mesh_.node(i + 1) - x;
    const double b = x - mesh_.node(i);
    return (curvature_[i] * a + curvature_[i + 1] * b) / h;
}

}  // namespace thp
