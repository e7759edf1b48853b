#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "thp/error.hpp"
#include "thp/problem.hpp"
#include "thp/solver.hpp"

namespace thp::cli {

/// Configuration error located in the source text (1-based line/column;
/// line 0 when the problem is with the assembled problem as a whole).
class ConfigError : public Error {
public:
    ConfigError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct RunConfig {
    ProblemSpec problem;
    SolverOptions solver;
    std::filesystem::path output_dir = ".";
    bool verbose = false;
    /// Initial boundary guess as an expression in t (overrides initial_b).
    std::optional<std::string> seed_boundary;
    bool benchmark_preset = false;
};

/// Parses flat `key = value` text. Relative data-file paths resolve
/// against `base_dir`.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

/// Replaces the optimizer's initial coefficients with a least-squares fit of
/// `expression` (in t) sampled on the collocation t grid.
void apply_seed_boundary(RunConfig& config, const std::string& expression);

}  // namespace thp::cli
