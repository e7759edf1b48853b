#include "thp/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "thp/error.hpp"

namespace thp {

std::vector<int> OptimizerSettings::stages() const {
    if (order < 1) throw Error(ErrorKind::Configuration, "boundary order K must be >= 1");
    if (!(step_tolerance > 0.0) || !(value_tolerance > 0.0))
        throw Error(ErrorKind::Configuration, "optimizer tolerances must be positive");
    if (max_iterations < 1) throw Error(ErrorKind::Configuration, "max_iterations must be >= 1");
    if (!(penalty > 0.0) || !(simplex_scale > 0.0))
        throw Error(ErrorKind::Configuration, "penalty and simplex scale must be positive");

    std::vector<int> out;
    if (schedule.empty()) {
        for (int k : {2, 4})
            if (k < order) out.push_back(k);
        out.push_back(order);
        return out;
    }
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] < 1 || (i > 0 && schedule[i] <= schedule[i - 1]))
            throw Error(ErrorKind::Configuration, "warm-start schedule must be strictly increasing and positive");
    }
    if (schedule.back() != order)
        throw Error(ErrorKind::Configuration, "warm-start schedule must end at K");
    return schedule;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class PenalizedObjective {
public:
    PenalizedObjective(const Collocation& collocation, const OptimizerSettings& settings)
        : col_(collocation), settings_(settings) {}

    double operator()(const std::vector<double>& b) {
        ++evaluations;
        const BoundaryModel model(col_.spec().l, b);
        const auto times = col_.grid().t();
        const double violation = constraint_violation(model, times, col_.spec().L);

        // Infeasible candidates are scored at their projection onto the
        // admissible band, plus the penalty.
        const double upper = std::min(col_.spec().L, col_.table().mesh().end());
        std::vector<double> pos(times.size()), vel(times.size());
        for (std::size_t i = 0; i < times.size(); ++i) {
            pos[i] = std::clamp(model.position(times[i]), kBoundaryMargin, upper);
            vel[i] = model.velocity(times[i]);
        }
        double value = kInf;
        try {
            const auto sys = col_.system(pos, vel);
            value = residuals(sys, solve_linear(sys, settings_.rank_tol)).value;
        } catch (const Error&) {
            return kInf;
        }
        if (!std::isfinite(value)) return kInf;
        if (violation == 0.0 && value < best_feasible_value) {
            best_feasible_value = value;
            best_feasible = b;
        }
        return value + settings_.penalty * violation;
    }

    int evaluations = 0;
    double best_feasible_value = kInf;
    std::vector<double> best_feasible;

private:
    const Collocation& col_;
    const OptimizerSettings& settings_;
};

struct Vertex {
    std::vector<double> x;
    double f;
};

// Nelder-Mead with standard coefficients (reflect 1, expand 2, contract 1/2,
// shrink 1/2). Returns the best vertex; iterations are reported through `iters`.
Vertex nelder_mead(PenalizedObjective& objective, std::vector<double> start,
                   const OptimizerSettings& settings, int stage, int& iters) {
    const std::size_t dim = start.size();
    std::vector<Vertex> simplex;
    simplex.reserve(dim + 1);
    simplex.push_back({start, objective(start)});
    for (std::size_t i = 0; i < dim; ++i) {
        auto x = start;
        x[i] += settings.simplex_scale;
        simplex.push_back({x, objective(x)});
    }
    if (std::all_of(simplex.begin(), simplex.end(), [](const Vertex& v) { return !std::isfinite(v.f); })) {
        throw Error(ErrorKind::Optimization,
                    "inner least-squares solve failed at every initial simplex vertex");
    }

    auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    auto combine = [dim](const std::vector<double>& base, const std::vector<double>& toward,
                         double scale) {
        std::vector<double> p(dim);
        for (std::size_t i = 0; i < dim; ++i) p[i] = base[i] + scale * (toward[i] - base[i]);
        return p;
    };

    iters = 0;
    for (; iters < settings.max_iterations; ++iters) {
        std::stable_sort(simplex.begin(), simplex.end(), by_value);
        if (settings.trace) settings.trace({stage, static_cast<int>(dim), iters, simplex.front().f, simplex.front().x});

        const double spread = simplex.back().f - simplex.front().f;
        double diameter = 0.0;
        for (std::size_t v = 1; v <= dim; ++v)
            for (std::size_t i = 0; i < dim; ++i)
                diameter = std::max(diameter, std::abs(simplex[v].x[i] - simplex[0].x[i]));
        if (spread <= settings.value_tolerance && diameter <= settings.step_tolerance) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t v = 0; v < dim; ++v)
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(dim);

        auto& worst = simplex.back();
        const auto reflected = combine(centroid, worst.x, -1.0);
        const double f_reflected = objective(reflected);

        if (f_reflected < simplex.front().f) {
            const auto expanded = combine(centroid, worst.x, -2.0);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                worst = {expanded, f_expanded};
            } else {
                worst = {reflected, f_reflected};
            }
            continue;
        }
        if (f_reflected < simplex[dim - 1].f) {
            worst = {reflected, f_reflected};
            continue;
        }
        const bool outside = f_reflected < worst.f;
        const auto contracted = outside ? combine(centroid, reflected, 0.5) : combine(centroid, worst.x, 0.5);
        const double f_contracted = objective(contracted);
        if (f_contracted < (outside ? f_reflected : worst.f)) {
            worst = {contracted, f_contracted};
            continue;
        }
        for (std::size_t v = 1; v <= dim; ++v) {
            simplex[v].x = combine(simplex[0].x, simplex[v].x, 0.5);
            simplex[v].f = objective(simplex[v].x);
        }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    return simplex.front();
}

}  // namespace

OptimizationResult minimize_boundary(const Collocation& collocation, const OptimizerSettings& settings) {
    const auto orders = settings.stages();
    PenalizedObjective objective(collocation, settings);

    OptimizationResult result;
    std::vector<double> current = settings.initial;
    for (std::size_t stage = 0; stage < orders.size(); ++stage) {
        current.resize(static_cast<std::size_t>(orders[stage]), 0.0);
        // Stages restart the simplex, so feasibility is tracked per stage.
        objective.best_feasible_value = kInf;
        objective.best_feasible.clear();
        const int before = objective.evaluations;
        int iterations = 0;
        const Vertex best = nelder_mead(objective, current, settings, static_cast<int>(stage), iterations);

        double value = best.f;
        if (constraint_violation(BoundaryModel(collocation.spec().l, best.x), collocation.grid().t(),
                                 collocation.spec().L) == 0.0) {
            current = best.x;
        } else if (!objective.best_feasible.empty()) {
            current = objective.best_feasible;
            value = objective.best_feasible_value;
        } else {
            std::ostringstream msg;
            msg << "no admissible boundary found in stage " << stage << " (order " << orders[stage] << ")";
            throw Error(ErrorKind::Optimization, msg.str());
        }
        result.stages.push_back({orders[stage], iterations, objective.evaluations - before, value});
    }

    result.fit = collocation.fit(BoundaryModel(collocation.spec().l, current), settings.rank_tol);
    return result;
}

FitResult minimize_boundary(const ProblemSpec& spec, const CollocationGrid& grid,
                            const FormalPowerTable& table, const OptimizerSettings& settings) {
    return minimize_boundary(Collocation(spec, grid, table), settings).fit;
}

}  // namespace thp
