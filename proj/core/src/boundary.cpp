#include "thp/boundary.hpp"

#include <Eigen/Dense>

#include "thp/error.hpp"

namespace thp {

double BoundaryModel::position(double t) const {
    // Horner on sum_j b_j t^j, j >= 1.
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc + *it) * t;
    return initial_ + acc;
}

double BoundaryModel::velocity(double t) const {
    double acc = 0.0;
    for (std::size_t j = coeffs_.size(); j >= 1; --j)
        acc = acc * t + static_cast<double>(j) * coeffs_[j - 1];
    return acc;
}

BoundaryModel BoundaryModel::resized(int order) const {
    std::vector<double> c(static_cast<std::size_t>(order), 0.0);
    for (std::size_t j = 0; j < c.size() && j < coeffs_.size(); ++j) c[j] = coeffs_[j];
    return {initial_, std::move(c)};
}

double constraint_violation(const BoundaryModel& m, std::span<const double> times, double L) {
    double total = 0.0;
    for (double t : times) {
        const double s = m.position(t);
        if (s < kBoundaryMargin) {
            total += (kBoundaryMargin - s) * (kBoundaryMargin - s);
        } else if (s > L) {
            total += (s - L) * (s - L);
        }
    }
    return total;
}

BoundaryModel fit_boundary(double initial_position, int order, std::span<const double> times,
                           std::span<const double> positions) {
    if (times.size() != positions.size() || times.empty())
        throw Error(ErrorKind::Configuration, "boundary fit needs matching nonempty samples");
    if (order < 0) throw Error(ErrorKind::Configuration, "boundary order must be >= 0");
    if (order == 0) return {initial_position, {}};

    const auto rows = static_cast<Eigen::Index>(times.size());
    Eigen::MatrixXd design(rows, order);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double t = times[static_cast<std::size_t>(i)];
        double pw = t;
        for (int j = 0; j < order; ++j) {
            design(i, j) = pw;
            pw *= t;
        }
        rhs(i) = positions[static_cast<std::size_t>(i)] - initial_position;
    }
    const Eigen::VectorXd b = design.completeOrthogonalDecomposition().solve(rhs);
    return {initial_position, std::vector<double>(b.data(), b.data() + b.size())};
}

}  // namespace thp
