#include "cli/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "thp/boundary.hpp"
#include "thp/expr.hpp"
#include "thp/heat_polynomials.hpp"
#include "thp/special.hpp"

namespace thp::cli {

ConfigError::ConfigError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::Configuration,
            line == 0 ? message
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                            message),
      line_(line), column_(column) {}

namespace {

struct Entry {
    std::string value;
    std::size_t line = 0;
    std::size_t column = 0;  // column of the first value character
};

const char* const kKeys[] = {
    "preset",        "q",           "L",         "l",               "T",
    "gamma11",       "gamma12",     "g1",        "gamma21",         "gamma22",
    "g2",            "g3",          "g3_file",   "stefan",          "mesh_points",
    "N",             "Nx",          "Nt",        "K",               "schedule",
    "initial_b",     "initial_boundary", "max_iterations", "step_tolerance", "value_tolerance",
    "penalty",       "simplex_scale", "rank_tol", "output",         "verbose",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class Entries {
public:
    explicit Entries(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto eol = text.find('\n', pos);
            std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
            ++line_no;
            pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

            if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            if (trim(line).empty()) continue;

            const auto eq = line.find('=');
            const auto key_col = line.find_first_not_of(" \t") + 1;
            if (eq == std::string_view::npos) throw ConfigError(line_no, key_col, "expected 'key = value'");
            const auto key = trim(line.substr(0, eq));
            if (key.empty()) throw ConfigError(line_no, key_col, "missing key before '='");
            bool known = false;
            for (const char* k : kKeys) known = known || key == k;
            if (!known) throw ConfigError(line_no, key_col, "unknown key '" + std::string(key) + "'");
            if (entries_.count(std::string(key)))
                throw ConfigError(line_no, key_col, "duplicate key '" + std::string(key) + "'");

            const auto rest = line.substr(eq + 1);
            const auto value = trim(rest);
            const auto offset = rest.find_first_not_of(" \t");
            const std::size_t value_col = eq + 2 + (offset == std::string_view::npos ? 0 : offset);
            if (value.empty()) throw ConfigError(line_no, value_col, "empty value for '" + std::string(key) + "'");
            entries_[std::string(key)] = Entry{std::string(value), line_no, value_col};
        }
    }

    const Entry* find(const std::string& key) const {
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }
    bool has(const std::string& key) const { return find(key) != nullptr; }

private:
    std::map<std::string, Entry> entries_;
};

expr::Expression parse_expr(const Entry& e, std::string_view variable) {
    try {
        return expr::parse(e.value, variable);
    } catch (const expr::SyntaxError& err) {
        throw ConfigError(e.line, e.column + err.position(), err.what());
    }
}

RealFunction as_function(const Entry& e, std::string_view variable) {
    auto ex = parse_expr(e, variable);
    return [ex](double v) { return ex(v); };
}

double as_number(const Entry& e) {
    // Constant expressions such as "pi/2" are accepted.
    const auto ex = parse_expr(e, "_");
    try {
        return ex(0.0);
    } catch (const Error& err) {
        throw ConfigError(e.line, e.column, err.what());
    }
}

long as_integer(const Entry& e) {
    long v = 0;
    const auto* first = e.value.data();
    const auto* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw ConfigError(e.line, e.column, "expected an integer, got '" + e.value + "'");
    return v;
}

bool as_bool(const Entry& e) {
    if (e.value == "true" || e.value == "yes" || e.value == "1") return true;
    if (e.value == "false" || e.value == "no" || e.value == "0") return false;
    throw ConfigError(e.line, e.column, "expected true or false, got '" + e.value + "'");
}

std::vector<double> as_number_list(const Entry& e) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= e.value.size()) {
        auto comma = e.value.find(',', start);
        if (comma == std::string::npos) comma = e.value.size();
        Entry item{std::string(trim(std::string_view(e.value).substr(start, comma - start))), e.line, e.column + start};
        if (item.value.empty()) throw ConfigError(e.line, e.column + start, "empty list element");
        out.push_back(as_number(item));
        start = comma + 1;
    }
    return out;
}

TabulatedSeries read_series(const Entry& e, const std::filesystem::path& base_dir) {
    std::filesystem::path path = e.value;
    if (path.is_relative()) path = base_dir / path;
    std::ifstream in(path);
    if (!in) throw ConfigError(e.line, e.column, "cannot open data file '" + path.string() + "'");
    TabulatedSeries series;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto comma = text.find(',');
        if (comma == std::string_view::npos)
            throw ConfigError(e.line, e.column, path.string() + ":" + std::to_string(row) + ": expected 't,value'");
        double t = 0.0, v = 0.0;
        const auto a = trim(text.substr(0, comma));
        const auto b = trim(text.substr(comma + 1));
        const auto ra = std::from_chars(a.data(), a.data() + a.size(), t);
        const auto rb = std::from_chars(b.data(), b.data() + b.size(), v);
        if (ra.ec != std::errc{} || rb.ec != std::errc{} || ra.ptr != a.data() + a.size() ||
            rb.ptr != b.data() + b.size()) {
            if (series.times.empty() && row == 1) continue;  // header
            throw ConfigError(e.line, e.column, path.string() + ":" + std::to_string(row) + ": malformed number");
        }
        series.times.push_back(t);
        series.values.push_back(v);
    }
    if (series.times.empty()) throw ConfigError(e.line, e.column, "data file '" + path.string() + "' has no rows");
    return series;
}

const Entry& require(const Entries& entries, const std::string& key) {
    const auto* e = entries.find(key);
    if (!e) throw ConfigError(0, 0, "missing required key '" + key + "'");
    return *e;
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    const Entries entries(text);
    RunConfig config;
    auto& opts = config.solver;

    auto integer = [&](const char* key, auto& target, long min) {
        if (const auto* e = entries.find(key)) {
            const long v = as_integer(*e);
            if (v < min)
                throw ConfigError(e->line, e->column, std::string(key) + " must be >= " + std::to_string(min));
            target = static_cast<std::remove_reference_t<decltype(target)>>(v);
        }
    };
    auto number = [&](const char* key, double& target) {
        if (const auto* e = entries.find(key)) target = as_number(*e);
    };

    integer("mesh_points", opts.mesh_points, 6);
    integer("N", opts.degree, 0);
    integer("Nx", opts.nx, 1);
    integer("Nt", opts.nt, 1);
    integer("K", opts.optimizer.order, 1);
    integer("max_iterations", opts.optimizer.max_iterations, 1);
    number("step_tolerance", opts.optimizer.step_tolerance);
    number("value_tolerance", opts.optimizer.value_tolerance);
    number("penalty", opts.optimizer.penalty);
    number("simplex_scale", opts.optimizer.simplex_scale);
    number("rank_tol", opts.optimizer.rank_tol);
    if (const auto* e = entries.find("schedule")) {
        opts.optimizer.schedule.clear();
        for (double v : as_number_list(*e)) opts.optimizer.schedule.push_back(static_cast<int>(v));
    }
    if (const auto* e = entries.find("initial_b")) opts.optimizer.initial = as_number_list(*e);
    if (const auto* e = entries.find("initial_boundary")) config.seed_boundary = e->value;
    if (const auto* e = entries.find("output")) config.output_dir = e->value;
    if (const auto* e = entries.find("verbose")) config.verbose = as_bool(*e);

    auto& spec = config.problem;
    if (const auto* preset = entries.find("preset")) {
        if (preset->value != "exact-benchmark")
            throw ConfigError(preset->line, preset->column, "unknown preset '" + preset->value + "'");
        for (const char* key : {"q", "L", "l", "T", "gamma11", "gamma12", "g1", "gamma21", "gamma22",
                                "g2", "g3", "g3_file", "stefan"}) {
            if (const auto* e = entries.find(key))
                throw ConfigError(e->line, 1, std::string("'") + key + "' cannot be combined with a preset");
        }
        const auto grid = CollocationGrid::uniform(1.0, 1.0, opts.nx, opts.nt);
        spec = exact_benchmark(grid.t()).spec;
        config.benchmark_preset = true;
    } else {
        const auto q = parse_expr(require(entries, "q"), "x");
        spec.potential = [q](double x) { return complex(q(x)); };
        spec.L = as_number(require(entries, "L"));
        spec.l = as_number(require(entries, "l"));
        spec.T = as_number(require(entries, "T"));

        auto fn_or = [&](const char* key, std::string_view var, double fallback) -> RealFunction {
            if (const auto* e = entries.find(key)) return as_function(*e, var);
            return [fallback](double) { return fallback; };
        };
        if (const auto* g1 = entries.find("g1")) {
            spec.initial = InitialCondition{fn_or("gamma11", "x", 1.0), fn_or("gamma12", "x", 0.0),
                                            as_function(*g1, "x")};
        } else {
            for (const char* key : {"gamma11", "gamma12"})
                if (const auto* e = entries.find(key))
                    throw ConfigError(e->line, 1, std::string("'") + key + "' given without g1");
        }
        if (const auto* g2 = entries.find("g2")) {
            spec.fixed = FixedBoundaryCondition{fn_or("gamma21", "t", 0.0), fn_or("gamma22", "t", 1.0),
                                                as_function(*g2, "t")};
        } else {
            for (const char* key : {"gamma21", "gamma22"})
                if (const auto* e = entries.find(key))
                    throw ConfigError(e->line, 1, std::string("'") + key + "' given without g2");
        }
        const auto* g3 = entries.find("g3");
        const auto* g3_file = entries.find("g3_file");
        if (g3 && g3_file) throw ConfigError(g3_file->line, 1, "give either g3 or g3_file, not both");
        if (g3) spec.free_value = as_function(*g3, "t");
        if (g3_file) spec.free_value = read_series(*g3_file, base_dir);
        if (const auto* e = entries.find("stefan")) spec.stefan = as_bool(*e);
    }

    try {
        spec.validate();
        (void)opts.optimizer.stages();
        (void)UniformMesh(0.0, spec.L, opts.mesh_points);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(0, 0, e.what());
    }
    if (opts.degree > kMaxHeatDegree)
        throw ConfigError(0, 0, "N must not exceed " + std::to_string(kMaxHeatDegree));

    if (config.seed_boundary) apply_seed_boundary(config, *config.seed_boundary);
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, 0, "cannot read config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.parent_path());
}

void apply_seed_boundary(RunConfig& config, const std::string& expression) {
    const auto& spec = config.problem;
    const auto& opts = config.solver;
    expr::Expression seed = [&] {
        try {
            return expr::parse(expression, "t");
        } catch (const expr::SyntaxError& e) {
            throw ConfigError(0, 0, std::string("seed boundary: ") + e.what());
        }
    }();
    const auto grid = CollocationGrid::uniform(spec.l, spec.T, opts.nx, opts.nt);
    std::vector<double> positions;
    try {
        if (std::abs(seed(0.0) - spec.l) > 1e-9)
            throw ConfigError(0, 0, "seed boundary must satisfy s(0) = l");
        for (double t : grid.t()) positions.push_back(seed(t));
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(0, 0, std::string("seed boundary: ") + e.what());
    }
    const int order = opts.optimizer.stages().front();
    const auto model = fit_boundary(spec.l, order, grid.t(), positions);
    config.solver.optimizer.initial.assign(model.coefficients().begin(), model.coefficients().end());
    config.seed_boundary = expression;
}

}  // namespace thp::cli
