#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "thp/formal_powers.hpp"
#include "thp/solver.hpp"

namespace thp::cli {

/// Shortest round-trip decimal text; locale independent.
std::string format_number(double value);

void write_boundary_csv(std::ostream& out, const Solution& solution);
void write_coefficients(std::ostream& out, const Solution& solution);
void write_residuals(std::ostream& out, const FitResult& fit);
/// u_N on a points x points grid covering D(s_K): t_j = j T/(points-1),
/// x_i = s_K(t_j) i/(points-1).
void write_solution_csv(std::ostream& out, const Solution& solution, int points = 51);
void write_phi_csv(std::ostream& out, const FormalPowerTable& table, int n_max);
void write_trace_header(std::ostream& out, int order);
/// Rows are padded with empty fields up to `order` coefficients.
void write_trace_row(std::ostream& out, const TraceEntry& entry, int order);

/// Largest |Im a_n| of the basis coefficients.
double max_imaginary(std::span<const complex> a);

}  // namespace thp::cli
