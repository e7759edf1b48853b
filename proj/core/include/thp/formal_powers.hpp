#pragma once

#include <vector>

#include "thp/numerics.hpp"
#include "thp/particular_solution.hpp"

namespace thp {

/// Formal powers phi_0..phi_N associated with a particular solution f, and
/// their derivatives, as node tables plus cubic interpolants.
///
/// phi_n = f X^(n) for odd n and f X~^(n) for even n, where
///   X^(n)  = n int_0^x X^(n-1)  (f^2)^((-1)^n)
///   X~^(n) = n int_0^x X~^(n-1) (f^2)^((-1)^(n-1)).
/// Derivatives are assembled in closed form from the same integrals.
class FormalPowerTable {
public:
    FormalPowerTable(ParticularSolution particular, const SampledFunction& potential, int degree);

    int degree() const noexcept { return degree_; }
    const UniformMesh& mesh() const noexcept { return particular_.mesh(); }
    const ParticularSolution& particular() const noexcept { return particular_; }

    complex phi(int n, double x) const;
    complex phi_prime(int n, double x) const;

    /// Values of phi_n at the mesh nodes.
    const SampledFunction& phi_nodes(int n) const;
    const SampledFunction& phi_prime_nodes(int n) const;

    /// Potential q interpolated from its node values.
    complex potential(double x) const { return potential_.value(x); }

private:
    void check_index(int n) const;

    ParticularSolution particular_;
    int degree_;
    std::vector<SampledFunction> phi_nodes_;
    std::vector<SampledFunction> phi_prime_nodes_;
    std::vector<CubicSpline> phi_;
    std::vector<CubicSpline> phi_prime_;
    CubicSpline potential_;
};

FormalPowerTable build_formal_powers(const ParticularSolution& f, const SampledFunction& potential,
                                     int degree);

inline complex phi_eval(const FormalPowerTable& table, int n, double x) { return table.phi(n, x); }
inline complex phi_prime_eval(const FormalPowerTable& table, int n, double x) {
    return table.phi_prime(n, x);
}

}  // namespace thp
