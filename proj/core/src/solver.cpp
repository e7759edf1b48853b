#include "thp/solver.hpp"

#include <chrono>

#include "thp/formal_powers.hpp"
#include "thp/heat_polynomials.hpp"

namespace thp {
namespace {

template <class Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(name, e);
    }
}

}  // namespace

FormalPowerTable build_basis(const ProblemSpec& spec, std::size_t mesh_points, int degree,
                             const SppsOptions& spps) {
    const auto potential = stage("potential", [&] {
        return SampledFunction::sample(UniformMesh(0.0, spec.L, mesh_points), spec.potential);
    });
    auto particular = stage("particular-solution", [&] { return solve_particular(potential, spps); });
    return stage("formal-powers", [&] { return FormalPowerTable(std::move(particular), potential, degree); });
}

complex Solution::u(double x, double t) const { return thp_combination(table, fit().a, x, t); }

Solution solve(const ProblemSpec& spec, const SolverOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    stage("problem", [&] {
        spec.validate();
        return 0;
    });
    auto grid = stage("collocation-grid",
                      [&] { return CollocationGrid::uniform(spec.l, spec.T, options.nx, options.nt); });
    auto table = build_basis(spec, options.mesh_points, options.degree, options.spps);

    Solution solution{spec, std::move(grid), std::move(table), {}, 0.0};
    solution.optimization = stage("optimize", [&] {
        const Collocation collocation(solution.spec, solution.grid, solution.table);
        return minimize_boundary(collocation, options.optimizer);
    });
    solution.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return solution;
}

}  // namespace thp
