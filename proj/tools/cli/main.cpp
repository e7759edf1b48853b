#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace thp::cli;

    CLI::App app{"Free boundary solver for u_xx - q(x) u = u_t using transmuted heat polynomials"};
    app.require_subcommand(1);

    Overrides overrides;
    std::string out_dir;
    int degree = 0;
    int order = 0;
    std::size_t mesh = 0;
    std::string seed;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_dir, "Output directory");
        cmd->add_flag("--verbose", overrides.verbose, "Write trace.csv and progress to stderr");
        cmd->add_option("--N", degree, "Highest formal power / heat polynomial degree");
        cmd->add_option("--K", order, "Boundary polynomial order");
        cmd->add_option("--mesh", mesh, "Mesh node count ((nodes - 1) divisible by 5)");
        cmd->add_option("--seed-boundary", seed, "Initial boundary guess, expression in t");
    };

    std::string config_path;
    auto* solve = app.add_subcommand("solve", "Solve the free boundary problem described by a config file");
    solve->add_option("config", config_path, "Config file")->required();
    add_common(solve);

    auto* validate = app.add_subcommand("validate-example", "Run the exact benchmark and check tolerances");
    add_common(validate);

    int n_max = 0;
    auto* dump = app.add_subcommand("basis-dump", "Write formal power node values to phi.csv");
    dump->add_option("config", config_path, "Config file")->required();
    dump->add_option("--n", n_max, "Highest formal power to write")->required();
    add_common(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kConfigError;
    }

    auto* active = app.get_subcommands().front();
    if (active->count("--out")) overrides.output_dir = out_dir;
    if (active->count("--N")) overrides.degree = degree;
    if (active->count("--K")) overrides.order = order;
    if (active->count("--mesh")) overrides.mesh_points = mesh;
    if (active->count("--seed-boundary")) overrides.seed_boundary = seed;

    if (active == solve) return cmd_solve(config_path, overrides, std::cout, std::cerr);
    if (active == validate) return cmd_validate_example(overrides, std::cout, std::cerr);
    return cmd_basis_dump(config_path, n_max, overrides, std::cout, std::cerr);
}
