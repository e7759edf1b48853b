#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "thp/error.hpp"

namespace thp::expr {

struct Node;

/// Immutable single-variable arithmetic expression.
///
/// Grammar (whitespace insensitive):
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?          right associative
///   primary := number | 'pi' | 'e' | variable | func '(' sum ')' | '(' sum ')'
///   func    := exp | log | sqrt | sin | cos | sinh | cosh | abs
class Expression {
public:
    double operator()(double value) const { return evaluate(value); }
    double evaluate(double value) const;

    const std::string& variable() const noexcept { return variable_; }

    /// Fully parenthesized text that parses back to an equivalent tree.
    std::string to_string() const;

private:
    friend Expression parse(std::string_view, std::string_view);
    Expression(std::shared_ptr<const Node> root, std::string variable)
        : root_(std::move(root)), variable_(std::move(variable)) {}

    std::shared_ptr<const Node> root_;
    std::string variable_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error(ErrorKind::Syntax, message), position_(position) {}

    /// Zero-based offset into the source text.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

Expression parse(std::string_view source, std::string_view variable);

inline double eval(const Expression& e, double value) { return e.evaluate(value); }

}  // namespace thp::expr
