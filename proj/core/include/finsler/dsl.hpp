#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "finsler/jet.hpp"
#include "finsler/norm.hpp"

namespace finsler::dsl {

/// Syntax error, unknown identifier or out-of-range variable, with the
/// 1-based source position it was detected at.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (at " + std::to_string(line) + ":" + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_, column_;
};

/// The sampled scaling test F(2y) = 2 F(y) failed; carries the exponent
/// the expression actually scales with.
class HomogeneityError : public Error {
public:
    HomogeneityError(const std::string& what, double measured_exponent)
        : Error(what), measured_exponent_(measured_exponent) {}

    double measured_exponent() const noexcept { return measured_exponent_; }

private:
    double measured_exponent_;
};

/// A node could not be evaluated at the given point (division by zero,
/// sqrt of a negative, ...). Names the node and its source position.
class EvalError : public Error {
public:
    EvalError(const std::string& what, std::string node, int line, int column)
        : Error(what + " in '" + node + "' (at " + std::to_string(line) + ":" +
                std::to_string(column) + ")"),
          node_(std::move(node)), line_(line), column_(column) {}

    const std::string& node() const noexcept { return node_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string node_;
    int line_, column_;
};

/// Exponent of a power node, kept exactly as written (no reduction).
struct Rational {
    long long num = 0;
    long long den = 1;
};

/// Immutable expression tree node; subtrees may be shared.
struct Expr {
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Sqrt, Pow };

    Kind kind = Kind::Constant;
    double constant = 0.0;                 // Constant
    int variable = 0;                      // Variable, 1-based index
    std::shared_ptr<const Expr> lhs, rhs;  // children; unary nodes use lhs
    Rational exponent;                     // Pow
    int line = 0, column = 0;              // source position of the node
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses `source` into a raw expression tree over variables y1..y<dimension>.
/// Grammar (EBNF, also documented in the README):
///
///   expr     = term { ("+" | "-") term } ;
///   term     = unary { ("*" | "/") unary } ;
///   unary    = "-" unary | power ;
///   power    = atom [ "^" exponent ] ;
///   atom     = NUMBER | VARIABLE | "sqrt" "(" expr ")" | "(" expr ")" ;
///   exponent = ["-"] INTEGER | "(" ["-"] INTEGER ["/" ["-"] INTEGER] ")" ;
///
/// NUMBER is a positive decimal literal, VARIABLE is y1..yn. Precedence is
/// ^ before unary minus before * / before + -. Only syntax and variable
/// scope are checked here; use parse() to get a validated norm expression.
ExprPtr parse_expression(std::string_view source, int dimension);

std::string print(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);

/// Evaluate over plain doubles. Throws EvalError on domain violations.
double eval(const Expr& e, const Vector& y);

/// Evaluate over second-order jets; gradient and Hessian of the expression.
Jet2 eval_jet(const Expr& e, const Vector& y);

/// A parsed expression that passed the numeric 1-homogeneity gate
/// (|F(2y) - 2F(y)| <= 1e-7 |F(y)| on 32 deterministic sample points, F > 0
/// at every sample).
class NormExpr {
public:
    NormExpr(ExprPtr root, int dimension);

    const Expr& root() const { return *root_; }
    ExprPtr root_ptr() const { return root_; }
    int dimension() const { return dimension_; }
    std::string print() const { return dsl::print(*root_); }

private:
    ExprPtr root_;
    int dimension_;
};

/// parse_expression + homogeneity validation.
NormExpr parse(std::string_view source, int dimension);

/// Wraps a validated expression as a FinslerNorm.
FinslerNorm to_norm(NormExpr expr);

}  // namespace finsler::dsl
