#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thp {

enum class ErrorKind {
    Configuration,  // malformed mesh, problem or settings
    Domain,         // argument outside the region where a function is defined
    Syntax,         // expression parse failure
    Evaluation,     // expression evaluated to a non-finite value
    Convergence,    // truncated series did not converge
    Nonvanishing,   // particular solution has a zero on the mesh
    Degenerate,     // linear system carries no information
    Constraint,     // boundary candidate violates 0 < s <= L
    Optimization,   // outer minimization produced no admissible point
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace thp
