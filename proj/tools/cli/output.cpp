#include "cli/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace thp::cli {

std::string format_number(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return {buf, end};
}

namespace {

std::string fixed8(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", value);
    return buf;
}

std::string sci8(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8e", value);
    return buf;
}

}  // namespace

double max_imaginary(std::span<const complex> a) {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v.imag()));
    return m;
}

void write_boundary_csv(std::ostream& out, const Solution& solution) {
    const auto boundary = solution.boundary();
    out << "t,s\n";
    for (double t : solution.grid.t()) out << format_number(t) << ',' << format_number(boundary.position(t)) << '\n';
}

void write_coefficients(std::ostream& out, const Solution& solution) {
    const auto& fit = solution.fit();
    const bool real = max_imaginary(fit.a) <= 1e-8;
    out << "# boundary s_K(t) = l + sum_j b_j t^j\n";
    out << "l = " << fixed8(solution.spec.l) << '\n';
    for (std::size_t j = 0; j < fit.b.size(); ++j) out << "b_" << j + 1 << " = " << fixed8(fit.b[j]) << '\n';

    out << "s_K(t) = " << fixed8(solution.spec.l);
    for (std::size_t j = 0; j < fit.b.size(); ++j) {
        out << ' ' << (fit.b[j] < 0 ? '-' : '+') << fixed8(std::abs(fit.b[j])) << 't';
        if (j > 0) out << '^' << j + 1;
    }
    out << '\n';

    out << "# basis coefficients u_N = sum_n a_n H_n" << (real ? "" : " (real, imaginary)") << '\n';
    for (std::size_t n = 0; n < fit.a.size(); ++n) {
        out << "a_" << n << " = " << sci8(fit.a[n].real());
        if (!real) out << ' ' << sci8(fit.a[n].imag());
        out << '\n';
    }
}

void write_residuals(std::ostream& out, const FitResult& fit) {
    static constexpr const char* kNames[] = {"initial", "fixed_boundary", "free_value", "stefan"};
    for (std::size_t i = 0; i < 4; ++i) out << "I" << i + 1 << " = " << sci8(fit.residual_norms[i]) << '\n';
    out << "F = " << sci8(fit.value) << '\n';
    for (std::size_t i = 0; i < 4; ++i) out << "max_" << kNames[i] << " = " << sci8(fit.residual_max[i]) << '\n';
}

void write_solution_csv(std::ostream& out, const Solution& solution, int points) {
    const auto boundary = solution.boundary();
    out << "t,x,u\n";
    for (int j = 0; j < points; ++j) {
        const double t = solution.spec.T * j / (points - 1);
        const double s = boundary.position(t);
        for (int i = 0; i < points; ++i) {
            const double x = s * i / (points - 1);
            out << format_number(t) << ',' << format_number(x) << ',' << format_number(solution.u(x, t).real())
                << '\n';
        }
    }
}

void write_phi_csv(std::ostream& out, const FormalPowerTable& table, int n_max) {
    out << 'x';
    for (int n = 0; n <= n_max; ++n) out << ",re_phi" << n;
    for (int n = 0; n <= n_max; ++n) out << ",im_phi" << n;
    out << '\n';
    const auto& mesh = table.mesh();
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        out << format_number(mesh.node(i));
        for (int n = 0; n <= n_max; ++n) out << ',' << format_number(table.phi_nodes(n)[i].real());
        for (int n = 0; n <= n_max; ++n) out << ',' << format_number(table.phi_nodes(n)[i].imag());
        out << '\n';
    }
}

void write_trace_header(std::ostream& out, int order) {
    out << "stage,order,iteration,objective";
    for (int j = 1; j <= order; ++j) out << ",b" << j;
    out << '\n';
}

void write_trace_row(std::ostream& out, const TraceEntry& entry, int order) {
    out << entry.stage << ',' << entry.order << ',' << entry.iteration << ',' << format_number(entry.objective);
    for (double b : entry.b) out << ',' << format_number(b);
    for (auto j = static_cast<int>(entry.b.size()); j < order; ++j) out << ',';
    out << '\n';
}

}  // namespace thp::cli
