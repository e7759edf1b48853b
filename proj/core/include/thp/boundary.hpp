#pragma once

#include <span>
#include <vector>

namespace thp {

/// Free-boundary candidate s(t) = l + sum_{j=1}^{K} b_j t^j.
class BoundaryModel {
public:
    BoundaryModel(double initial_position, std::vector<double> coefficients)
        : initial_(initial_position), coeffs_(std::move(coefficients)) {}

    double initial_position() const noexcept { return initial_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()); }
    std::span<const double> coefficients() const noexcept { return coeffs_; }

    double position(double t) const;
    double velocity(double t) const;

    /// Same boundary with coefficients zero-padded (or truncated) to `order`.
    BoundaryModel resized(int order) const;

private:
    double initial_;
    std::vector<double> coeffs_;
};

inline double s_eval(const BoundaryModel& m, double t) { return m.position(t); }
inline double s_dot_eval(const BoundaryModel& m, double t) { return m.velocity(t); }

/// Lower margin for admissibility: s must stay at or above this.
inline constexpr double kBoundaryMargin = 1e-6;

/// Summed squared violation of margin <= s(t_i) <= L over the sample times;
/// zero when the candidate is admissible everywhere on the samples.
double constraint_violation(const BoundaryModel& m, std::span<const double> times, double L);

/// Least-squares fit of the coefficients b_1..b_K to samples of a target
/// boundary, keeping s(0) = l fixed.
BoundaryModel fit_boundary(double initial_position, int order, std::span<const double> times,
                           std::span<const double> positions);

}  // namespace thp
