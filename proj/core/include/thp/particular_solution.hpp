#pragma once

#include <optional>

#include "thp/numerics.hpp"

namespace thp {

/// Nonvanishing solution of f'' = q f on the mesh with f(0) = 1.
struct ParticularSolution {
    SampledFunction f;
    SampledFunction f_prime;
    complex f_prime_at_0;
    /// True when y1 vanished on the mesh and f = y1 + i y2 was used instead.
    bool complex_combination = false;
    /// Wronskian y1 y2' - y1' y2 at the nodes (identically 1 in exact arithmetic).
    SampledFunction wronskian;

    const UniformMesh& mesh() const noexcept { return f.mesh(); }
};

struct SppsOptions {
    int max_terms = 50;
    double tolerance = 1e-14;
    /// |f| below this at any node counts as a zero.
    double zero_threshold = 1e-10;
};

/// Solves f'' - q f = 0, f(0) = 1, f'(0) = 0 by a spectral-parameter power
/// series of iterated integrals. Falls back to f = y1 + i y2 when y1 has a
/// zero on the mesh.
ParticularSolution solve_particular(const SampledFunction& q, const SppsOptions& options = {});

}  // namespace thp
