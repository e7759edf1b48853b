#include "thp/formal_powers.hpp"

#include <cmath>
#include <sstream>

#include "thp/error.hpp"

namespace thp {
namespace {

constexpr double kDivisionThreshold = 1e-10;

}  // namespace

FormalPowerTable::FormalPowerTable(ParticularSolution particular, const SampledFunction& potential,
                                   int degree)
    : particular_(std::move(particular)), degree_(degree), potential_(potential) {
    if (degree < 0) throw Error(ErrorKind::Configuration, "formal power degree must be >= 0");
    if (!(potential.mesh() == particular_.mesh()))
        throw Error(ErrorKind::Configuration, "potential and particular solution meshes differ");

    const auto& mesh = particular_.mesh();
    const auto& f = particular_.f;
    const auto& fp = particular_.f_prime;
    const std::size_t size = mesh.size();

    std::vector<complex> f2(size), inv_f(size), inv_f2(size);
    for (std::size_t i = 0; i < size; ++i) {
        if (std::abs(f[i]) < kDivisionThreshold) {
            std::ostringstream msg;
            msg << "particular solution nearly vanishes at x = " << mesh.node(i)
                << "; formal powers would divide by zero";
            throw Error(ErrorKind::Nonvanishing, msg.str());
        }
        f2[i] = f[i] * f[i];
        inv_f[i] = 1.0 / f[i];
        inv_f2[i] = inv_f[i] * inv_f[i];
    }
    const SampledFunction weight_plus(mesh, f2);      // f^2
    const SampledFunction weight_minus(mesh, inv_f2);  // f^-2

    SampledFunction x_prev = SampledFunction::constant(mesh, 1.0);        // X^(n-1)
    SampledFunction x_tilde_prev = SampledFunction::constant(mesh, 1.0);  // X~^(n-1)

    phi_nodes_.reserve(static_cast<std::size_t>(degree) + 1);
    phi_prime_nodes_.reserve(static_cast<std::size_t>(degree) + 1);
    phi_nodes_.push_back(f);
    phi_prime_nodes_.push_back(fp);

    for (int n = 1; n <= degree; ++n) {
        const bool odd = n % 2 == 1;
        const auto& w_x = odd ? weight_minus : weight_plus;
        const auto& w_tilde = odd ? weight_plus : weight_minus;
        SampledFunction x_next = static_cast<double>(n) * cumulative_integral(x_prev * w_x);
        SampledFunction x_tilde_next =
            static_cast<double>(n) * cumulative_integral(x_tilde_prev * w_tilde);

        // Odd n uses X, even n uses X~; either way the derivative of the
        // chosen integral is n * prev / f^2, so phi' = f' X + n prev / f.
        const auto& chosen = odd ? x_next : x_tilde_next;
        const auto& chosen_prev = odd ? x_prev : x_tilde_prev;
        std::vector<complex> phi(size), dphi(size);
        for (std::size_t i = 0; i < size; ++i) {
            phi[i] = f[i] * chosen[i];
            dphi[i] = fp[i] * chosen[i] + static_cast<double>(n) * chosen_prev[i] * inv_f[i];
        }
        phi_nodes_.emplace_back(mesh, std::move(phi));
        phi_prime_nodes_.emplace_back(mesh, std::move(dphi));

        x_prev = std::move(x_next);
        x_tilde_prev = std::move(x_tilde_next);
    }

    phi_.reserve(phi_nodes_.size());
    phi_prime_.reserve(phi_nodes_.size());
    for (std::size_t n = 0; n < phi_nodes_.size(); ++n) {
        phi_.emplace_back(phi_nodes_[n]);
        phi_prime_.emplace_back(phi_prime_nodes_[n]);
    }
}

void FormalPowerTable::check_index(int n) const {
    if (n < 0 || n > degree_) {
        std::ostringstream msg;
        msg << "formal power index " << n << " outside [0, " << degree_ << "]";
        throw Error(ErrorKind::Domain, msg.str());
    }
}

complex FormalPowerTable::phi(int n, double x) const {
    check_index(n);
    return phi_[static_cast<std::size_t>(n)].value(x);
}

complex FormalPowerTable::phi_prime(int n, double x) const {
    check_index(n);
    return phi_prime_[static_cast<std::size_t>(n)].value(x);
}

const SampledFunction& FormalPowerTable::phi_nodes(int n) const {
    check_index(n);
    return phi_nodes_[static_cast<std::size_t>(n)];
}

const SampledFunction& FormalPowerTable::phi_prime_nodes(int n) const {
    check_index(n);
    return phi_prime_nodes_[static_cast<std::size_t>(n)];
}

FormalPowerTable build_formal_powers(const ParticularSolution& f, const SampledFunction& potential,
                                     int degree) {
    return FormalPowerTable(f, potential, degree);
}

}  // namespace thp
