#include "thp/particular_solution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "thp/error.hpp"

namespace thp {
namespace {

struct SeriesSolution {
    SampledFunction y;
    SampledFunction y_prime;
};

// y = sum_m Y_m with Y_{m+1} = int int q Y_m, started from the seed
// (1 for y1, x for y2). The derivative accumulates the inner integrals.
SeriesSolution sum_series(const SampledFunction& q, const SampledFunction& seed,
                          const SampledFunction& seed_prime, const SppsOptions& options) {
    SampledFunction y = seed;
    SampledFunction y_prime = seed_prime;
    SampledFunction term = seed;
    double last_norm = 0.0;
    for (int m = 1; m <= options.max_terms; ++m) {
        SampledFunction inner = cumulative_integral(q * term);
        term = cumulative_integral(inner);
        y += term;
        y_prime += inner;
        last_norm = std::max(term.max_abs(), inner.max_abs());
        const double scale = std::max(y.max_abs(), y_prime.max_abs());
        if (last_norm <= options.tolerance * scale) return {std::move(y), std::move(y_prime)};
    }
    std::ostringstream msg;
    msg << "particular solution series did not converge in " << options.max_terms
        << " terms (last term norm " << last_norm << ")";
    throw Error(ErrorKind::Convergence, msg.str());
}

double min_abs(const SampledFunction& fn) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& v : fn.values()) m = std::min(m, std::abs(v));
    return m;
}

}  // namespace

ParticularSolution solve_particular(const SampledFunction& q, const SppsOptions& options) {
    const auto& mesh = q.mesh();
    if (mesh.start() != 0.0) throw Error(ErrorKind::Configuration, "potential mesh must start at 0");

    const auto one = SampledFunction::constant(mesh, 1.0);
    const auto zero = SampledFunction::constant(mesh, 0.0);
    const auto x = SampledFunction::sample(mesh, [](double s) { return complex(s); });

    auto y1 = sum_series(q, one, zero, options);
    auto y2 = sum_series(q, x, one, options);

    std::vector<complex> w(mesh.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = y1.y[i] * y2.y_prime[i] - y1.y_prime[i] * y2.y[i];
    SampledFunction wronskian(mesh, std::move(w));

    if (min_abs(y1.y) >= options.zero_threshold) {
        const complex fp0 = y1.y_prime[0];
        return {std::move(y1.y), std::move(y1.y_prime), fp0, false, std::move(wronskian)};
    }

    const complex i(0.0, 1.0);
    SampledFunction f = y1.y + i * y2.y;
    SampledFunction fp = y1.y_prime + i * y2.y_prime;
    if (min_abs(f) < options.zero_threshold) {
        throw Error(ErrorKind::Nonvanishing,
                    "particular solution y1 + i*y2 vanishes on the mesh");
    }
    const complex fp0 = fp[0];
    return {std::move(f), std::move(fp), fp0, true, std::move(wronskian)};
}

}  // namespace thp
