#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "thp/boundary.hpp"
#include "thp/formal_powers.hpp"
#include "thp/problem.hpp"

namespace thp {

enum class Block { Initial = 0, Fixed = 1, FreeValue = 2, Stefan = 3 };

/// Overdetermined collocation system B a ~= g. Row blocks appear in the
/// order initial (x grid), fixed boundary, free-boundary value, Stefan;
/// absent conditions contribute zero rows.
struct LinearSystem {
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd rhs;
    std::array<Eigen::Index, 4> block_rows{};

    Eigen::Index block_offset(Block b) const noexcept {
        Eigen::Index off = 0;
        for (int i = 0; i < static_cast<int>(b); ++i) off += block_rows[static_cast<std::size_t>(i)];
        return off;
    }
};

struct FitResult {
    std::vector<complex> a;
    std::vector<double> b;
    /// F = sum of squared block norms.
    double value = 0.0;
    /// I_1..I_4: Euclidean norm of each block's residual.
    std::array<double, 4> residual_norms{};
    /// Largest absolute residual within each block.
    std::array<double, 4> residual_max{};
};

complex row_B(int n, double x, const FormalPowerTable& table, const InitialCondition& condition);
complex row_C(int n, double t, const FormalPowerTable& table, const FixedBoundaryCondition& condition);
/// (D_n, E_n): H_n and its x-derivative at (s, t).
std::pair<complex, complex> rows_D_E(int n, double t, double s, const FormalPowerTable& table);

/// Collocation rows for a fixed problem, grid and basis. The initial and
/// fixed-boundary blocks do not depend on the free boundary and are built
/// once; the free-boundary blocks are rebuilt per candidate.
class Collocation {
public:
    Collocation(const ProblemSpec& spec, const CollocationGrid& grid, const FormalPowerTable& table);

    const ProblemSpec& spec() const noexcept { return *spec_; }
    const CollocationGrid& grid() const noexcept { return *grid_; }
    const FormalPowerTable& table() const noexcept { return *table_; }
    int columns() const noexcept { return table_->degree() + 1; }

    /// Throws ErrorKind::Constraint when the boundary leaves (0, L] on the t grid.
    LinearSystem system(const BoundaryModel& boundary) const;
    /// System for explicit boundary positions and velocities at the t grid.
    LinearSystem system(std::span<const double> positions, std::span<const double> velocities) const;

    /// Inner least-squares solve for a, then the value function.
    FitResult fit(const BoundaryModel& boundary, double rank_tol = 1e-12) const;
    /// Value function for given basis coefficients.
    FitResult evaluate(const BoundaryModel& boundary, std::span<const complex> a) const;

private:
    const ProblemSpec* spec_;
    const CollocationGrid* grid_;
    const FormalPowerTable* table_;
    Eigen::MatrixXcd fixed_rows_;
    Eigen::VectorXcd fixed_rhs_;
    std::array<Eigen::Index, 2> fixed_block_rows_{};
    std::vector<double> free_rhs_;  // g3 at the t grid
};

LinearSystem assemble_system(const ProblemSpec& spec, const CollocationGrid& grid,
                             const FormalPowerTable& table, const BoundaryModel& boundary);

/// Minimum-norm least-squares solution by SVD; singular values below
/// rank_tol * sigma_max are treated as zero.
std::vector<complex> solve_linear(const LinearSystem& system, double rank_tol = 1e-12);
Eigen::VectorXcd solve_least_squares(const Eigen::MatrixXcd& matrix, const Eigen::VectorXcd& rhs,
                                     double rank_tol = 1e-12);

/// Block residual norms and F for coefficients `a` on an assembled system.
FitResult residuals(const LinearSystem& system, std::span<const complex> a);

FitResult value_function(const ProblemSpec& spec, const CollocationGrid& grid,
                         const FormalPowerTable& table, const BoundaryModel& boundary,
                         std::span<const complex> a);

}  // namespace thp
