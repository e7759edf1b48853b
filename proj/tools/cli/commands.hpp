#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "cli/config.hpp"

namespace thp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kConfigError = 2,
    kNumericFailure = 3,
};

/// Overrides given on the command line; unset fields keep config values.
struct Overrides {
    std::optional<std::filesystem::path> output_dir;
    std::optional<int> degree;
    std::optional<int> order;
    std::optional<std::size_t> mesh_points;
    std::optional<std::string> seed_boundary;
    bool verbose = false;
};

/// Applies overrides; throws ConfigError when the result is invalid.
void apply_overrides(RunConfig& config, const Overrides& overrides);

int cmd_solve(const std::filesystem::path& config_path, const Overrides& overrides, std::ostream& out,
              std::ostream& err);
int cmd_validate_example(const Overrides& overrides, std::ostream& out, std::ostream& err);
int cmd_basis_dump(const std::filesystem::path& config_path, int n_max, const Overrides& overrides,
                   std::ostream& out, std::ostream& err);

}  // namespace thp::cli
