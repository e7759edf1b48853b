#include "cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <optional>

#include "cli/output.hpp"
#include "thp/heat_polynomials.hpp"
#include "thp/validation.hpp"

namespace thp::cli {
namespace {

std::ofstream open_output(const std::filesystem::path& dir, const char* name) {
    std::ofstream file(dir / name, std::ios::binary);
    if (!file) throw Error(ErrorKind::Configuration, "cannot write " + (dir / name).string());
    return file;
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError(0, 0, "cannot create output directory '" + dir.string() + "': " + ec.message());
}

}  // namespace

void apply_overrides(RunConfig& config, const Overrides& overrides) {
    auto& opts = config.solver;
    if (overrides.output_dir) config.output_dir = *overrides.output_dir;
    if (overrides.verbose) config.verbose = true;
    if (overrides.degree) {
        if (*overrides.degree < 0 || *overrides.degree > kMaxHeatDegree)
            throw ConfigError(0, 0, "--N must lie in [0, " + std::to_string(kMaxHeatDegree) + "]");
        opts.degree = *overrides.degree;
    }
    if (overrides.order) {
        if (*overrides.order < 1) throw ConfigError(0, 0, "--K must be >= 1");
        opts.optimizer.order = *overrides.order;
    }
    if (overrides.mesh_points) opts.mesh_points = *overrides.mesh_points;
    try {
        (void)opts.optimizer.stages();
        (void)UniformMesh(0.0, config.problem.L, opts.mesh_points);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(0, 0, e.what());
    }
    if (overrides.seed_boundary) apply_seed_boundary(config, *overrides.seed_boundary);
}

int cmd_solve(const std::filesystem::path& config_path, const Overrides& overrides, std::ostream& out,
              std::ostream& err) {
    RunConfig config;
    try {
        config = load_config(config_path);
        apply_overrides(config, overrides);
        ensure_directory(config.output_dir);
    } catch (const Error& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }

    std::ofstream trace;
    if (config.verbose) {
        trace = open_output(config.output_dir, "trace.csv");
        const int order = config.solver.optimizer.order;
        write_trace_header(trace, order);
        config.solver.optimizer.trace = [&trace, &err, order](const TraceEntry& e) {
            write_trace_row(trace, e, order);
            if (e.iteration % 50 == 0)
                err << "stage " << e.stage << " (K=" << e.order << ") iteration " << e.iteration
                    << ": F = " << format_number(e.objective) << '\n';
        };
    }

    std::optional<Solution> solved;
    try {
        solved = solve(config.problem, config.solver);
    } catch (const StageError& e) {
        err << "numeric failure in stage '" << e.stage() << "': " << e.what() << '\n';
        return kNumericFailure;
    }
    const Solution& solution = *solved;

    try {
        auto boundary = open_output(config.output_dir, "boundary.csv");
        write_boundary_csv(boundary, solution);
        auto coeffs = open_output(config.output_dir, "coefficients.txt");
        write_coefficients(coeffs, solution);
        auto resid = open_output(config.output_dir, "residuals.txt");
        write_residuals(resid, solution.fit());
        auto field = open_output(config.output_dir, "solution.csv");
        write_solution_csv(field, solution);
    } catch (const Error& e) {
        err << "numeric failure in stage 'output': " << e.what() << '\n';
        return kNumericFailure;
    }

    if (max_imaginary(solution.fit().a) > 1e-8)
        err << "warning: basis coefficients have imaginary parts up to "
            << format_number(max_imaginary(solution.fit().a)) << '\n';

    out << "solved in " << std::fixed << std::setprecision(2) << solution.seconds << " s; F = "
        << std::scientific << std::setprecision(6) << solution.fit().value << '\n';
    out << "outputs written to " << config.output_dir.string() << '\n';
    return kSuccess;
}

int cmd_validate_example(const Overrides& overrides, std::ostream& out, std::ostream& err) {
    auto options = benchmark_options();
    try {
        RunConfig config;
        config.problem = exact_benchmark(CollocationGrid::uniform(1.0, 1.0, options.nx, options.nt).t()).spec;
        config.solver = options;
        apply_overrides(config, overrides);
        options = config.solver;
    } catch (const Error& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }

    const auto result = validate_benchmark(options);
    out << "exact benchmark: N = " << options.degree << ", K = " << options.optimizer.order
        << ", mesh = " << options.mesh_points << '\n';
    if (!result.failure.empty()) {
        out << "FAIL  solve: " << result.failure << '\n';
        return kValidationFailure;
    }
    int failures = 0;
    for (const auto& c : result.criteria) {
        out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << c.name << ' '
            << std::scientific << std::setprecision(3) << c.measured << " <= " << c.threshold << '\n';
        if (!c.passed) ++failures;
    }
    if (failures > 0) {
        out << failures << " criterion(s) failed\n";
        return kValidationFailure;
    }
    out << "all " << result.criteria.size() << " criteria passed\n";
    return kSuccess;
}

int cmd_basis_dump(const std::filesystem::path& config_path, int n_max, const Overrides& overrides,
                   std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = load_config(config_path);
        apply_overrides(config, overrides);
        if (n_max < 0 || n_max > config.solver.degree) {
            throw ConfigError(0, 0, "--n " + std::to_string(n_max) + " outside [0, N = " +
                                        std::to_string(config.solver.degree) + "]");
        }
        ensure_directory(config.output_dir);
    } catch (const Error& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    try {
        const auto table = build_basis(config.problem, config.solver.mesh_points, config.solver.degree,
                                       config.solver.spps);
        auto file = open_output(config.output_dir, "phi.csv");
        write_phi_csv(file, table, n_max);
    } catch (const StageError& e) {
        err << "numeric failure in stage '" << e.stage() << "': " << e.what() << '\n';
        return kNumericFailure;
    } catch (const Error& e) {
        err << "numeric failure in stage 'output': " << e.what() << '\n';
        return kNumericFailure;
    }
    out << "wrote " << (config.output_dir / "phi.csv").string() << '\n';
    return kSuccess;
}

}  // namespace thp::cli
