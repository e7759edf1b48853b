#include "thp/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>
#include <vector>

namespace thp::expr {

enum class Func { Exp, Log, Sqrt, Sin, Cos, Sinh, Cosh, Abs };

struct Literal {
    double value;
};
struct Variable {};
struct Negate {
    std::shared_ptr<const Node> operand;
};
struct Binary {
    char op;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};
struct Call {
    Func func;
    std::shared_ptr<const Node> arg;
};

struct Node {
    std::variant<Literal, Variable, Negate, Binary, Call> data;
};

namespace {

using NodePtr = std::shared_ptr<const Node>;

template <class T>
NodePtr make(T value) {
    return std::make_shared<const Node>(Node{std::move(value)});
}

struct FuncName {
    std::string_view name;
    Func func;
};

constexpr FuncName kFunctions[] = {
    {"exp", Func::Exp},   {"log", Func::Log},   {"sqrt", Func::Sqrt}, {"sin", Func::Sin},
    {"cos", Func::Cos},   {"sinh", Func::Sinh}, {"cosh", Func::Cosh}, {"abs", Func::Abs},
};

std::string_view name_of(Func f) {
    for (const auto& entry : kFunctions)
        if (entry.func == f) return entry.name;
    return "?";
}

class Parser {
public:
    Parser(std::string_view src, std::string_view variable) : src_(src), variable_(variable) {}

    NodePtr parse() {
        skip_space();
        if (pos_ == src_.size()) fail("empty expression");
        auto root = sum();
        skip_space();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream msg;
        msg << what << " at position " << pos_;
        throw SyntaxError(pos_, msg.str());
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr sum() {
        auto lhs = product();
        for (;;) {
            if (accept('+')) {
                lhs = make(Binary{'+', lhs, product()});
            } else if (accept('-')) {
                lhs = make(Binary{'-', lhs, product()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr product() {
        auto lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = make(Binary{'*', lhs, unary()});
            } else if (accept('/')) {
                lhs = make(Binary{'/', lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Negate{unary()});
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        auto base = primary();
        if (accept('^')) return make(Binary{'^', base, unary()});
        return base;
    }

    NodePtr primary() {
        skip_space();
        if (pos_ == src_.size()) fail("unexpected end of expression");
        const char c = src_[pos_];
        if (accept('(')) {
            auto inner = sum();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        double value = 0.0;
        auto [end, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value);
        if (ec != std::errc{}) fail("malformed number");
        pos_ = static_cast<std::size_t>(end - src_.data());
        if (pos_ == start) fail("malformed number");
        return make(Literal{value});
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const auto name = src_.substr(start, pos_ - start);

        for (const auto& entry : kFunctions) {
            if (entry.name == name) {
                if (!accept('(')) fail("expected '(' after function '" + std::string(name) + "'");
                auto arg = sum();
                if (accept(',')) fail("function '" + std::string(name) + "' takes one argument");
                if (!accept(')')) fail("expected ')'");
                return make(Call{entry.func, arg});
            }
        }
        if (name == variable_) return make(Variable{});
        if (name == "pi") return make(Literal{std::numbers::pi});
        if (name == "e") return make(Literal{std::numbers::e});

        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "' (variable is '" +
             std::string(variable_) + "')");
    }

    std::string_view src_;
    std::string_view variable_;
    std::size_t pos_ = 0;
};

[[noreturn]] void eval_fail(const std::string& what, double arg) {
    std::ostringstream msg;
    msg << what << " (argument " << arg << ")";
    throw Error(ErrorKind::Evaluation, msg.str());
}

double checked(double value, const char* what, double arg) {
    if (!std::isfinite(value)) eval_fail(std::string("non-finite result of ") + what, arg);
    return value;
}

double eval_node(const Node& node, double x) {
    return std::visit(
        [x](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Literal>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return x;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval_node(*n.operand, x);
            } else if constexpr (std::is_same_v<T, Binary>) {
                const double a = eval_node(*n.lhs, x);
                const double b = eval_node(*n.rhs, x);
                switch (n.op) {
                    case '+': return checked(a + b, "addition", a);
                    case '-': return checked(a - b, "subtraction", a);
                    case '*': return checked(a * b, "multiplication", a);
                    case '/':
                        if (b == 0.0) eval_fail("division by zero", a);
                        return checked(a / b, "division", a);
                    default: return checked(std::pow(a, b), "power", a);
                }
            } else {
                const double a = eval_node(*n.arg, x);
                switch (n.func) {
                    case Func::Exp: return checked(std::exp(a), "exp", a);
                    case Func::Log:
                        if (a <= 0.0) eval_fail("log of nonpositive value", a);
                        return std::log(a);
                    case Func::Sqrt:
                        if (a < 0.0) eval_fail("sqrt of negative value", a);
                        return std::sqrt(a);
                    case Func::Sin: return std::sin(a);
                    case Func::Cos: return std::cos(a);
                    case Func::Sinh: return checked(std::sinh(a), "sinh", a);
                    case Func::Cosh: return checked(std::cosh(a), "cosh", a);
                    case Func::Abs: return std::abs(a);
                }
                return 0.0;
            }
        },
        node.data);
}

void print_node(const Node& node, const std::string& variable, std::ostream& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Literal>) {
                char buf[32];
                auto [end, ec] = std::to_chars(buf, buf + sizeof buf, n.value);
                (void)ec;
                out << '(' << std::string_view(buf, static_cast<std::size_t>(end - buf)) << ')';
            } else if constexpr (std::is_same_v<T, Variable>) {
                out << variable;
            } else if constexpr (std::is_same_v<T, Negate>) {
                out << "(-";
                print_node(*n.operand, variable, out);
                out << ')';
            } else if constexpr (std::is_same_v<T, Binary>) {
                out << '(';
                print_node(*n.lhs, variable, out);
                out << n.op;
                print_node(*n.rhs, variable, out);
                out << ')';
            } else {
                out << name_of(n.func) << '(';
                print_node(*n.arg, variable, out);
                out << ')';
            }
        },
        node.data);
}

}  // namespace

double Expression::evaluate(double value) const { return eval_node(*root_, value); }

std::string Expression::to_string() const {
    std::ostringstream out;
    print_node(*root_, variable_, out);
    return out.str();
}

Expression parse(std::string_view source, std::string_view variable) {
    if (variable.empty()) throw Error(ErrorKind::Configuration, "expression variable name is empty");
    Parser parser(source, variable);
    return Expression(parser.parse(), std::string(variable));
}

}  // namespace thp::expr
