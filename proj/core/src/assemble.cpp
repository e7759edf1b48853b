#include "thp/assemble.hpp"

#include <cmath>
#include <sstream>

#include "thp/error.hpp"
#include "thp/heat_polynomials.hpp"

namespace thp {

complex row_B(int n, double x, const FormalPowerTable& table, const InitialCondition& condition) {
    // At t = 0 only the k = 0 term of H_n survives and c_0^n = 1.
    return condition.gamma11(x) * table.phi(n, x) + condition.gamma12(x) * table.phi_prime(n, x);
}

complex row_C(int n, double t, const FormalPowerTable& table, const FixedBoundaryCondition& condition) {
    // At x = 0 every phi_m vanishes except phi_0 = 1, and every phi_m'
    // vanishes except phi_0' = f'(0) and phi_1' = 1.
    if (n % 2 == 1) {
        const int k = (n - 1) / 2;
        return condition.gamma22(t) * static_cast<double>(heat_coeff(n, k)) * std::pow(t, k);
    }
    const int k = n / 2;
    const complex fp0 = table.particular().f_prime_at_0;
    return (condition.gamma21(t) + condition.gamma22(t) * fp0) *
           static_cast<double>(heat_coeff(n, k)) * std::pow(t, k);
}

std::pair<complex, complex> rows_D_E(int n, double t, double s, const FormalPowerTable& table) {
    if (!(s > 0.0) || s > table.mesh().end()) {
        std::ostringstream msg;
        msg << "boundary position " << s << " outside (0, " << table.mesh().end() << "]";
        throw Error(ErrorKind::Domain, msg.str());
    }
    return {thp_eval(table, n, s, t), thp_x_deriv(table, n, s, t)};
}

Collocation::Collocation(const ProblemSpec& spec, const CollocationGrid& grid,
                         const FormalPowerTable& table)
    : spec_(&spec), grid_(&grid), table_(&table) {
    spec.validate();
    if (spec.L > table.mesh().end() * (1.0 + 1e-12))
        throw Error(ErrorKind::Configuration, "formal powers do not cover [0, L]");
    if (std::abs(grid.x().back() - spec.l) > 1e-12 * spec.l)
        throw Error(ErrorKind::Configuration, "collocation x grid must end at l");
    if (std::abs(grid.t().back() - spec.T) > 1e-12 * spec.T)
        throw Error(ErrorKind::Configuration, "collocation t grid must end at T");

    const int cols = columns();
    const auto nx = static_cast<Eigen::Index>(grid.x().size());
    const auto nt = static_cast<Eigen::Index>(grid.t().size());
    fixed_block_rows_ = {spec.initial ? nx : 0, spec.fixed ? nt : 0};
    const Eigen::Index total_rows = fixed_block_rows_[0] + fixed_block_rows_[1] + 2 * nt;
    if (cols > total_rows) {
        std::ostringstream msg;
        msg << "basis size " << cols << " exceeds collocation row count " << total_rows;
        throw Error(ErrorKind::Configuration, msg.str());
    }

    fixed_rows_.resize(fixed_block_rows_[0] + fixed_block_rows_[1], cols);
    fixed_rhs_.resize(fixed_rows_.rows());
    Eigen::Index row = 0;
    if (spec.initial) {
        for (double x : grid.x()) {
            for (int n = 0; n < cols; ++n) fixed_rows_(row, n) = row_B(n, x, table, *spec.initial);
            fixed_rhs_(row++) = spec.initial->g1(x);
        }
    }
    if (spec.fixed) {
        for (double t : grid.t()) {
            for (int n = 0; n < cols; ++n) fixed_rows_(row, n) = row_C(n, t, table, *spec.fixed);
            fixed_rhs_(row++) = spec.fixed->g2(t);
        }
    }

    free_rhs_.reserve(grid.t().size());
    for (double t : grid.t()) free_rhs_.push_back(spec.free_value_at(t));
}

LinearSystem Collocation::system(const BoundaryModel& boundary) const {
    const auto times = grid_->t();
    if (constraint_violation(boundary, times, spec_->L) > 0.0) {
        throw Error(ErrorKind::Constraint, "boundary candidate leaves (0, L] on the t grid");
    }
    std::vector<double> pos(times.size()), vel(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        pos[i] = boundary.position(times[i]);
        vel[i] = boundary.velocity(times[i]);
    }
    return system(pos, vel);
}

LinearSystem Collocation::system(std::span<const double> positions,
                                 std::span<const double> velocities) const {
    const auto times = grid_->t();
    if (positions.size() != times.size() || velocities.size() != times.size())
        throw Error(ErrorKind::Configuration, "boundary samples do not match the t grid");

    const int cols = columns();
    const auto nt = static_cast<Eigen::Index>(times.size());
    const Eigen::Index fixed = fixed_rows_.rows();

    LinearSystem sys;
    sys.block_rows = {fixed_block_rows_[0], fixed_block_rows_[1], nt, nt};
    sys.matrix.resize(fixed + 2 * nt, cols);
    sys.rhs.resize(sys.matrix.rows());
    sys.matrix.topRows(fixed) = fixed_rows_;
    sys.rhs.head(fixed) = fixed_rhs_;

    const auto& table = *table_;
    std::vector<complex> phi(static_cast<std::size_t>(cols)), dphi(static_cast<std::size_t>(cols));
    for (Eigen::Index i = 0; i < nt; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const double t = times[idx];
        const double s = positions[idx];
        if (!(s > 0.0) || s > table.mesh().end()) {
            std::ostringstream msg;
            msg << "boundary position " << s << " at t = " << t << " outside (0, "
                << table.mesh().end() << "]";
            throw Error(ErrorKind::Domain, msg.str());
        }
        for (int m = 0; m < cols; ++m) {
            phi[static_cast<std::size_t>(m)] = table.phi(m, s);
            dphi[static_cast<std::size_t>(m)] = table.phi_prime(m, s);
        }
        for (int n = 0; n < cols; ++n) {
            complex d = 0.0, e = 0.0;
            double tk = 1.0;
            for (int k = 0; 2 * k <= n; ++k) {
                const double c = static_cast<double>(heat_coeff(n, k)) * tk;
                d += c * phi[static_cast<std::size_t>(n - 2 * k)];
                e += c * dphi[static_cast<std::size_t>(n - 2 * k)];
                tk *= t;
            }
            sys.matrix(fixed + i, n) = d;
            sys.matrix(fixed + nt + i, n) = e;
        }
        sys.rhs(fixed + i) = free_rhs_[idx];
        sys.rhs(fixed + nt + i) = -velocities[idx];
    }
    return sys;
}

FitResult Collocation::fit(const BoundaryModel& boundary, double rank_tol) const {
    const auto sys = system(boundary);
    const auto a = solve_linear(sys, rank_tol);
    auto result = residuals(sys, a);
    result.b.assign(boundary.coefficients().begin(), boundary.coefficients().end());
    return result;
}

FitResult Collocation::evaluate(const BoundaryModel& boundary, std::span<const complex> a) const {
    auto result = residuals(system(boundary), a);
    result.b.assign(boundary.coefficients().begin(), boundary.coefficients().end());
    return result;
}

LinearSystem assemble_system(const ProblemSpec& spec, const CollocationGrid& grid,
                             const FormalPowerTable& table, const BoundaryModel& boundary) {
    return Collocation(spec, grid, table).system(boundary);
}

Eigen::VectorXcd solve_least_squares(const Eigen::MatrixXcd& matrix, const Eigen::VectorXcd& rhs,
                                     double rank_tol) {
    if (matrix.size() == 0) throw Error(ErrorKind::Degenerate, "empty linear system");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    if (!(sigma_max > 0.0)) throw Error(ErrorKind::Degenerate, "linear system matrix is zero");

    const Eigen::VectorXcd projected = svd.matrixU().adjoint() * rhs;
    Eigen::VectorXcd scaled = Eigen::VectorXcd::Zero(sigma.size());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > rank_tol * sigma_max) scaled(i) = projected(i) / sigma(i);
    }
    return svd.matrixV() * scaled;
}

std::vector<complex> solve_linear(const LinearSystem& system, double rank_tol) {
    const Eigen::VectorXcd a = solve_least_squares(system.matrix, system.rhs, rank_tol);
    return {a.data(), a.data() + a.size()};
}

FitResult residuals(const LinearSystem& system, std::span<const complex> a) {
    if (static_cast<Eigen::Index>(a.size()) != system.matrix.cols())
        throw Error(ErrorKind::Configuration, "coefficient count does not match the system");
    const Eigen::Map<const Eigen::VectorXcd> coeffs(a.data(), static_cast<Eigen::Index>(a.size()));
    const Eigen::VectorXcd r = system.matrix * coeffs - system.rhs;

    FitResult result;
    result.a.assign(a.begin(), a.end());
    Eigen::Index offset = 0;
    for (std::size_t blk = 0; blk < 4; ++blk) {
        const Eigen::Index rows = system.block_rows[blk];
        if (rows > 0) {
            const auto seg = r.segment(offset, rows);
            result.residual_norms[blk] = seg.norm();
            result.residual_max[blk] = seg.cwiseAbs().maxCoeff();
        }
        offset += rows;
    }
    for (double norm : result.residual_norms) result.value += norm * norm;
    return result;
}

FitResult value_function(const ProblemSpec& spec, const CollocationGrid& grid,
                         const FormalPowerTable& table, const BoundaryModel& boundary,
                         std::span<const complex> a) {
    return Collocation(spec, grid, table).evaluate(boundary, a);
}

}  // namespace thp
