#include "finsler/jet.hpp"

#include <cmath>
#include <string>

namespace finsler {

Jet2 Jet2::constant(double c, Eigen::Index dim) {
    return {c, Vector::Zero(dim), Matrix::Zero(dim, dim)};
}

Jet2 Jet2::variable(double v, Eigen::Index dim, Eigen::Index index) {
    Jet2 j = constant(v, dim);
    j.gradient(index) = 1.0;
    return j;
}

namespace {

// f(u) for scalar f with derivatives df, d2f at u.value.
Jet2 chain(const Jet2& u, double f, double df, double d2f) {
    Jet2 r;
    r.value = f;
    r.gradient = df * u.gradient;
    // Materialize the outer product before scaling: Eigen would otherwise
    // fold the scalar into one factor, which breaks bitwise symmetry.
    const Matrix outer = u.gradient * u.gradient.transpose();
    r.hessian = d2f * outer + df * u.hessian;
    return r;
}

}  // namespace

Jet2 operator-(const Jet2& a) { return {-a.value, -a.gradient, -a.hessian}; }

Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.value + b.value, a.gradient + b.gradient, a.hessian + b.hessian};
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.value - b.value, a.gradient - b.gradient, a.hessian - b.hessian};
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.value = a.value * b.value;
    r.gradient = a.value * b.gradient + b.value * a.gradient;
    r.hessian = a.value * b.hessian + b.value * a.hessian;
    // One expression, so entries (i,j) and (j,i) see the same two products
    // in the same order and the Hessian stays symmetric bit-for-bit.
    r.hessian += a.gradient * b.gradient.transpose() + b.gradient * a.gradient.transpose();
    return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.value == 0.0) throw DomainError("jet division by zero");
    const double inv = 1.0 / b.value;
    return a * chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

Jet2 operator+(const Jet2& a, double c) { return {a.value + c, a.gradient, a.hessian}; }
Jet2 operator+(double c, const Jet2& a) { return a + c; }
Jet2 operator-(const Jet2& a, double c) { return {a.value - c, a.gradient, a.hessian}; }
Jet2 operator-(double c, const Jet2& a) { return {c - a.value, -a.gradient, -a.hessian}; }
Jet2 operator*(const Jet2& a, double c) { return {a.value * c, c * a.gradient, c * a.hessian}; }
Jet2 operator*(double c, const Jet2& a) { return a * c; }

Jet2 operator/(const Jet2& a, double c) {
    if (c == 0.0) throw DomainError("jet division by zero");
    return a * (1.0 / c);
}

Jet2 operator/(double c, const Jet2& a) {
    if (a.value == 0.0) throw DomainError("jet division by zero");
    const double inv = 1.0 / a.value;
    return chain(a, c * inv, -c * inv * inv, 2.0 * c * inv * inv * inv);
}

Jet2 sqrt(const Jet2& a) {
    if (!(a.value > 0.0)) {
        throw DomainError("jet sqrt requires a positive operand, got " +
                          std::to_string(a.value));
    }
    const double s = std::sqrt(a.value);
    return chain(a, s, 0.5 / s, -0.25 / (a.value * s));
}

Jet2 pow(const Jet2& a, long long num, long long den) {
    if (den == 0) throw DomainError("jet pow: zero denominator in exponent");
    if (den < 0) { num = -num; den = -den; }

    const bool integral = (den == 1);
    if (integral && num == 0) return Jet2::constant(1.0, a.dim());

    if (!integral && !(a.value > 0.0)) {
        throw DomainError("jet pow with fractional exponent requires a positive base, got " +
                          std::to_string(a.value));
    }
    if (integral && num < 0 && a.value == 0.0) {
        throw DomainError("jet pow: zero base with negative exponent");
    }

    const double r = static_cast<double>(num) / static_cast<double>(den);
    const double f = std::pow(a.value, r);
    const double c1 = r;
    const double c2 = r * (r - 1.0);
    const double df = (c1 == 0.0) ? 0.0 : c1 * std::pow(a.value, r - 1.0);
    const double d2f = (c2 == 0.0) ? 0.0 : c2 * std::pow(a.value, r - 2.0);
    return chain(a, f, df, d2f);
}

}  // namespace finsler
