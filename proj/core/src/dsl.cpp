#include "finsler/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include "finsler/detail/format.hpp"

namespace finsler::dsl {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxDepth = 256;

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

    Kind kind = Kind::End;
    double number = 0.0;
    bool integral = false;
    long long int_value = 0;
    std::string text;
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                      src_[pos_] == '\r' || src_[pos_] == '\n')) {
            if (src_[pos_] == '\n') { ++line_; col_ = 0; }
            ++pos_;
            ++col_;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= src_.size()) { tok_.kind = Token::Kind::End; return; }

        const char c = src_[pos_];
        switch (c) {
            case '+': tok_.kind = Token::Kind::Plus;   consume(1); return;
            case '-': tok_.kind = Token::Kind::Minus;  consume(1); return;
            case '*': tok_.kind = Token::Kind::Star;   consume(1); return;
            case '/': tok_.kind = Token::Kind::Slash;  consume(1); return;
            case '^': tok_.kind = Token::Kind::Caret;  consume(1); return;
            case '(': tok_.kind = Token::Kind::LParen; consume(1); return;
            case ')': tok_.kind = Token::Kind::RParen; consume(1); return;
            default: break;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
                ++end;
            }
            tok_.kind = Token::Kind::Ident;
            tok_.text = std::string(src_.substr(pos_, end - pos_));
            consume(end - pos_);
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void lex_number() {
        std::size_t end = pos_;
        bool integral = true;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        if (end < src_.size() && src_[end] == '.') {
            integral = false;
            ++end;
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        }
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t e = end + 1;
            if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
            if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
                integral = false;
                end = e;
                while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
            }
        }
        const std::string text(src_.substr(pos_, end - pos_));
        char* last = nullptr;
        const double value = std::strtod(text.c_str(), &last);
        if (last == text.c_str() || *last != '\0' || !std::isfinite(value)) {
            throw ParseError("malformed number '" + text + "'", line_, col_);
        }
        tok_.kind = Token::Kind::Number;
        tok_.number = value;
        tok_.integral = integral && text.size() <= 18;
        if (tok_.integral) tok_.int_value = std::atoll(text.c_str());
        tok_.text = text;
        consume(end - pos_);
    }

    void consume(std::size_t k) {
        pos_ += k;
        col_ += static_cast<int>(k);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// ---------------------------------------------------------------------------
// Parser (recursive descent, depth-limited)
// ---------------------------------------------------------------------------

class Parser {
public:
    Parser(std::string_view src, int dimension) : lex_(src), dim_(dimension) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr(0);
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End) {
            throw ParseError("unexpected trailing input", t.line, t.column);
        }
        return e;
    }

private:
    static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    void check_depth(int depth, const Token& t) const {
        if (depth > kMaxDepth) {
            throw ParseError("expression nested too deeply", t.line, t.column);
        }
    }

    ExprPtr parse_expr(int depth) {
        check_depth(depth, lex_.peek());
        ExprPtr e = parse_term(depth + 1);
        while (lex_.peek().kind == Token::Kind::Plus ||
               lex_.peek().kind == Token::Kind::Minus) {
            const Token op = lex_.take();
            ExprPtr r = parse_term(depth + 1);
            Expr n;
            n.kind = (op.kind == Token::Kind::Plus) ? Expr::Kind::Add : Expr::Kind::Sub;
            n.lhs = e;
            n.rhs = r;
            n.line = op.line;
            n.column = op.column;
            e = node(std::move(n));
        }
        return e;
    }

    ExprPtr parse_term(int depth) {
        check_depth(depth, lex_.peek());
        ExprPtr e = parse_unary(depth + 1);
        while (lex_.peek().kind == Token::Kind::Star ||
               lex_.peek().kind == Token::Kind::Slash) {
            const Token op = lex_.take();
            ExprPtr r = parse_unary(depth + 1);
            Expr n;
            n.kind = (op.kind == Token::Kind::Star) ? Expr::Kind::Mul : Expr::Kind::Div;
            n.lhs = e;
            n.rhs = r;
            n.line = op.line;
            n.column = op.column;
            e = node(std::move(n));
        }
        return e;
    }

    ExprPtr parse_unary(int depth) {
        check_depth(depth, lex_.peek());
        if (lex_.peek().kind == Token::Kind::Minus) {
            const Token op = lex_.take();
            Expr n;
            n.kind = Expr::Kind::Neg;
            n.lhs = parse_unary(depth + 1);
            n.line = op.line;
            n.column = op.column;
            return node(std::move(n));
        }
        return parse_power(depth + 1);
    }

    ExprPtr parse_power(int depth) {
        check_depth(depth, lex_.peek());
        ExprPtr base = parse_atom(depth + 1);
        if (lex_.peek().kind != Token::Kind::Caret) return base;
        const Token op = lex_.take();
        Expr n;
        n.kind = Expr::Kind::Pow;
        n.lhs = base;
        n.exponent = parse_exponent();
        n.line = op.line;
        n.column = op.column;
        return node(std::move(n));
    }

    long long parse_signed_integer(const char* what) {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        const Token t = lex_.take();
        if (t.kind != Token::Kind::Number || !t.integral) {
            throw ParseError(std::string("expected an integer ") + what +
                             " (general real exponents are not supported)",
                             t.line, t.column);
        }
        return neg ? -t.int_value : t.int_value;
    }

    Rational parse_exponent() {
        if (lex_.peek().kind == Token::Kind::LParen) {
            const Token open = lex_.take();
            Rational r;
            r.num = parse_signed_integer("exponent numerator");
            if (lex_.peek().kind == Token::Kind::Slash) {
                lex_.take();
                r.den = parse_signed_integer("exponent denominator");
                if (r.den == 0) throw ParseError("zero exponent denominator", open.line, open.column);
                if (r.den < 0) { r.num = -r.num; r.den = -r.den; }
            }
            const Token close = lex_.take();
            if (close.kind != Token::Kind::RParen) {
                throw ParseError("expected ')' after exponent", close.line, close.column);
            }
            return r;
        }
        Rational r;
        r.num = parse_signed_integer("exponent");
        return r;
    }

    ExprPtr parse_atom(int depth) {
        check_depth(depth, lex_.peek());
        const Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number: {
                Expr n;
                n.kind = Expr::Kind::Constant;
                n.constant = t.number;
                n.line = t.line;
                n.column = t.column;
                return node(std::move(n));
            }
            case Token::Kind::Ident: {
                if (t.text == "sqrt") {
                    const Token open = lex_.take();
                    if (open.kind != Token::Kind::LParen) {
                        throw ParseError("expected '(' after sqrt", open.line, open.column);
                    }
                    Expr n;
                    n.kind = Expr::Kind::Sqrt;
                    n.lhs = parse_expr(depth + 1);
                    n.line = t.line;
                    n.column = t.column;
                    const Token close = lex_.take();
                    if (close.kind != Token::Kind::RParen) {
                        throw ParseError("expected ')'", close.line, close.column);
                    }
                    return node(std::move(n));
                }
                if (t.text.size() >= 2 && t.text[0] == 'y' &&
                    t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
                    const long long idx = std::atoll(t.text.c_str() + 1);
                    if (idx < 1 || idx > dim_) {
                        throw ParseError("variable index out of range: " + t.text +
                                         " (dimension is " + std::to_string(dim_) + ")",
                                         t.line, t.column);
                    }
                    Expr n;
                    n.kind = Expr::Kind::Variable;
                    n.variable = static_cast<int>(idx);
                    n.line = t.line;
                    n.column = t.column;
                    return node(std::move(n));
                }
                throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
            }
            case Token::Kind::LParen: {
                ExprPtr e = parse_expr(depth + 1);
                const Token close = lex_.take();
                if (close.kind != Token::Kind::RParen) {
                    throw ParseError("expected ')'", close.line, close.column);
                }
                return e;
            }
            case Token::Kind::End:
                throw ParseError("unexpected end of input", t.line, t.column);
            default:
                throw ParseError("expected a number, variable, sqrt(...) or '('",
                                 t.line, t.column);
        }
    }

    Lexer lex_;
    int dim_;
};

}  // namespace

ExprPtr parse_expression(std::string_view source, int dimension) {
    if (dimension < 2) throw DomainError("dsl: dimension must be >= 2");
    if (source.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw ParseError("empty expression", 1, 1);
    }
    return Parser(source, dimension).parse();
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// Larger binds tighter: + - < * / < unary - < ^.
int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

void print_rec(const Expr& e, int parent_prec, std::string& out) {
    const int prec = precedence(e.kind);
    const bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (e.kind) {
        case Expr::Kind::Constant:
            out += detail::format_real(e.constant);
            break;
        case Expr::Kind::Variable:
            out += "y" + std::to_string(e.variable);
            break;
        case Expr::Kind::Add:
            print_rec(*e.lhs, prec, out);
            out += " + ";
            print_rec(*e.rhs, prec + 1, out);
            break;
        case Expr::Kind::Sub:
            print_rec(*e.lhs, prec, out);
            out += " - ";
            print_rec(*e.rhs, prec + 1, out);
            break;
        case Expr::Kind::Mul:
            print_rec(*e.lhs, prec, out);
            out += "*";
            print_rec(*e.rhs, prec + 1, out);
            break;
        case Expr::Kind::Div:
            print_rec(*e.lhs, prec, out);
            out += "/";
            print_rec(*e.rhs, prec + 1, out);
            break;
        case Expr::Kind::Neg:
            out += "-";
            print_rec(*e.lhs, prec, out);
            break;
        case Expr::Kind::Sqrt:
            out += "sqrt(";
            print_rec(*e.lhs, 0, out);
            out += ")";
            break;
        case Expr::Kind::Pow:
            print_rec(*e.lhs, prec + 1, out);
            out += "^";
            if (e.exponent.den == 1 && e.exponent.num >= 0) {
                out += std::to_string(e.exponent.num);
            } else if (e.exponent.den == 1) {
                out += "(" + std::to_string(e.exponent.num) + ")";
            } else {
                out += "(" + std::to_string(e.exponent.num) + "/" +
                       std::to_string(e.exponent.den) + ")";
            }
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string print(const Expr& e) {
    std::string out;
    print_rec(e, 0, out);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Constant: return a.constant == b.constant;
        case Expr::Kind::Variable: return a.variable == b.variable;
        case Expr::Kind::Pow:
            return a.exponent.num == b.exponent.num && a.exponent.den == b.exponent.den &&
                   structurally_equal(*a.lhs, *b.lhs);
        case Expr::Kind::Neg:
        case Expr::Kind::Sqrt:
            return structurally_equal(*a.lhs, *b.lhs);
        default:
            return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

// ---------------------------------------------------------------------------
// Evaluation over doubles and jets
// ---------------------------------------------------------------------------

namespace {

double value_of(double x) { return x; }
double value_of(const Jet2& x) { return x.value; }

double make_constant(double c, const std::vector<double>&) { return c; }
Jet2 make_constant(double c, const std::vector<Jet2>& vars) {
    return Jet2::constant(c, vars.front().dim());
}

double scalar_sqrt(double x) { return std::sqrt(x); }
Jet2 scalar_sqrt(const Jet2& x) { return sqrt(x); }

double scalar_pow(double x, const Rational& r) {
    if (r.den == 1) return std::pow(x, static_cast<double>(r.num));
    return std::pow(x, static_cast<double>(r.num) / static_cast<double>(r.den));
}
Jet2 scalar_pow(const Jet2& x, const Rational& r) { return pow(x, r.num, r.den); }

[[noreturn]] void eval_fail(const Expr& e, const std::string& what) {
    throw EvalError(what, print(e), e.line, e.column);
}

template <class S>
S eval_rec(const Expr& e, const std::vector<S>& vars) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            return make_constant(e.constant, vars);
        case Expr::Kind::Variable:
            return vars[static_cast<std::size_t>(e.variable - 1)];
        case Expr::Kind::Add: return eval_rec(*e.lhs, vars) + eval_rec(*e.rhs, vars);
        case Expr::Kind::Sub: return eval_rec(*e.lhs, vars) - eval_rec(*e.rhs, vars);
        case Expr::Kind::Mul: return eval_rec(*e.lhs, vars) * eval_rec(*e.rhs, vars);
        case Expr::Kind::Div: {
            S l = eval_rec(*e.lhs, vars);
            S r = eval_rec(*e.rhs, vars);
            if (value_of(r) == 0.0) eval_fail(e, "division by zero");
            return l / r;
        }
        case Expr::Kind::Neg: return -eval_rec(*e.lhs, vars);
        case Expr::Kind::Sqrt: {
            S u = eval_rec(*e.lhs, vars);
            if (!(value_of(u) > 0.0)) {
                eval_fail(e, "sqrt of a non-positive operand (" +
                                 detail::format_real(value_of(u)) + ")");
            }
            return scalar_sqrt(u);
        }
        case Expr::Kind::Pow: {
            S u = eval_rec(*e.lhs, vars);
            const double v = value_of(u);
            if (e.exponent.den != 1 && !(v > 0.0)) {
                eval_fail(e, "fractional power of a non-positive base (" +
                                 detail::format_real(v) + ")");
            }
            if (e.exponent.den == 1 && e.exponent.num < 0 && v == 0.0) {
                eval_fail(e, "negative power of zero");
            }
            return scalar_pow(u, e.exponent);
        }
    }
    eval_fail(e, "corrupt expression node");
}

}  // namespace

double eval(const Expr& e, const Vector& y) {
    std::vector<double> vars(y.data(), y.data() + y.size());
    return eval_rec<double>(e, vars);
}

Jet2 eval_jet(const Expr& e, const Vector& y) {
    const Eigen::Index n = y.size();
    std::vector<Jet2> vars;
    vars.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) vars.push_back(Jet2::variable(y(i), n, i));
    return eval_rec<Jet2>(e, vars);
}

// ---------------------------------------------------------------------------
// Homogeneity gate and NormExpr
// ---------------------------------------------------------------------------

namespace {

constexpr int kHomogeneitySamples = 32;
constexpr double kHomogeneityTol = 1e-7;

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void check_homogeneity(const Expr& root, int dim) {
    std::mt19937_64 rng(0x1d7a2f9b4c03e65aULL);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    std::vector<double> exponents;
    exponents.reserve(kHomogeneitySamples);
    bool inhomogeneous = false;
    bool positive = true;
    Vector witness;
    double witness_value = 0.0;

    for (int s = 0; s < kHomogeneitySamples; ++s) {
        Vector y(dim);
        do {
            for (int i = 0; i < dim; ++i) y(i) = unit(rng);
        } while (y.lpNorm<Eigen::Infinity>() < 0.1);

        const double f1 = eval(root, y);
        const double f2 = eval(root, Vector(2.0 * y));
        if (!std::isfinite(f1) || !std::isfinite(f2)) {
            throw DomainError("expression is not finite at y = " +
                              detail::format_vector(y) + "; not a norm on R^n \\ 0");
        }
        if (!(f1 > 0.0) && positive) {
            positive = false;
            witness = y;
            witness_value = f1;
        }
        if (f1 != 0.0) {
            exponents.push_back(std::log2(std::abs(f2 / f1)));
            if (std::abs(f2 - 2.0 * f1) > kHomogeneityTol * std::abs(f1)) inhomogeneous = true;
        }
    }

    // The scaling defect is the more informative diagnosis, so it wins when
    // both checks fail.
    if (inhomogeneous) {
        const double measured = exponents.empty() ? 0.0 : median(std::move(exponents));
        throw HomogeneityError(
            "expression is not positively 1-homogeneous: measured scaling exponent " +
                detail::format_real(measured),
            measured);
    }
    if (!positive) {
        throw DomainError("expression is not positive at y = " + detail::format_vector(witness) +
                          " (F = " + detail::format_real(witness_value) +
                          "); not a norm on R^n \\ 0");
    }
}

class DslNormImpl final : public FinslerNorm::Impl {
public:
    explicit DslNormImpl(NormExpr expr) : expr_(std::move(expr)) {}

    Eigen::Index dimension() const override { return expr_.dimension(); }

    double value(const Vector& y) const override {
        const double f = eval(expr_.root(), y);
        if (!(f > 0.0)) {
            throw DomainError("expression evaluates to a non-positive value (" +
                              detail::format_real(f) + "); the norm is invalid at y = " +
                              detail::format_vector(y));
        }
        return f;
    }

    Jet2 jet(const Vector& y) const override {
        Jet2 j = eval_jet(expr_.root(), y);
        if (!(j.value > 0.0)) {
            throw DomainError("expression evaluates to a non-positive value (" +
                              detail::format_real(j.value) + "); the norm is invalid at y = " +
                              detail::format_vector(y));
        }
        return j;
    }

    std::string definition() const override {
        return "dim = " + std::to_string(expr_.dimension()) + "\nF = " + expr_.print() + "\n";
    }

    std::string name() const override { return "dsl"; }

private:
    NormExpr expr_;
};

}  // namespace

NormExpr::NormExpr(ExprPtr root, int dimension) : root_(std::move(root)), dimension_(dimension) {
    if (!root_) throw DomainError("NormExpr: null expression");
    if (dimension_ < 2) throw DomainError("NormExpr: dimension must be >= 2");
    check_homogeneity(*root_, dimension_);
}

NormExpr parse(std::string_view source, int dimension) {
    return NormExpr(parse_expression(source, dimension), dimension);
}

FinslerNorm to_norm(NormExpr expr) {
    return FinslerNorm(std::make_shared<DslNormImpl>(std::move(expr)));
}

}  // namespace finsler::dsl
