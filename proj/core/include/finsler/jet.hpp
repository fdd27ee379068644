#pragma once

#include <Eigen/Dense>

#include "finsler/errors.hpp"

namespace finsler {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Second-order forward-mode jet: the value of a scalar quantity together
/// with its gradient and Hessian with respect to the n seed variables.
///
/// Arithmetic on jets propagates derivatives by the chain rule in one
/// forward pass. Every update writes symmetric combinations only, so the
/// Hessian stays symmetric bit-for-bit, not just to tolerance.
struct Jet2 {
    double value = 0.0;
    Vector gradient;
    Matrix hessian;

    Jet2() = default;
    Jet2(double v, Vector g, Matrix h)
        : value(v), gradient(std::move(g)), hessian(std::move(h)) {}

    /// A constant: zero gradient and Hessian over `dim` variables.
    static Jet2 constant(double c, Eigen::Index dim);

    /// The seed jet of variable `index` (0-based) with value `v`.
    static Jet2 variable(double v, Eigen::Index dim, Eigen::Index index);

    Eigen::Index dim() const { return gradient.size(); }
};

Jet2 operator-(const Jet2& a);

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);

Jet2 operator+(const Jet2& a, double c);
Jet2 operator+(double c, const Jet2& a);
Jet2 operator-(const Jet2& a, double c);
Jet2 operator-(double c, const Jet2& a);
Jet2 operator*(const Jet2& a, double c);
Jet2 operator*(double c, const Jet2& a);
Jet2 operator/(const Jet2& a, double c);
Jet2 operator/(double c, const Jet2& a);

/// sqrt(a); requires a.value > 0.
Jet2 sqrt(const Jet2& a);

/// a^(num/den). Integer exponents (den == 1) accept any base compatible
/// with the power; fractional exponents require a.value > 0.
Jet2 pow(const Jet2& a, long long num, long long den = 1);

}  // namespace finsler
