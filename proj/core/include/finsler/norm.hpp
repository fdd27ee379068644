#pragma once

#include <memory>
#include <string>

#include "finsler/jet.hpp"

namespace finsler {

/// Arguments closer to the origin than this are rejected: the norms are
/// only C^2 away from 0 and are never regularized there.
inline constexpr double kZeroThreshold = 1e-12;

/// Throws DomainError unless v has the expected dimension, finite entries
/// and is not (numerically) the zero vector. `what` names the argument in
/// the message.
void require_direction(const Vector& v, Eigen::Index dim, const char* what);

/// A positively 1-homogeneous scalar function on R^n (n >= 2), C^2 away
/// from the origin, evaluable as a plain value or as a second-order jet.
///
/// Copies share the immutable implementation; every entry point is a pure
/// function of its arguments and safe to call concurrently.
class FinslerNorm {
public:
    /// Implementation interface. Both entry points receive an argument that
    /// has already been validated (right dimension, finite, nonzero).
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual Eigen::Index dimension() const = 0;
        virtual double value(const Vector& y) const = 0;
        virtual Jet2 jet(const Vector& y) const = 0;
        /// Norm-definition text that parse_norm_definition() accepts back.
        virtual std::string definition() const = 0;
        /// Short label for reports ("randers", "mth-root", ...).
        virtual std::string name() const = 0;
    };

    explicit FinslerNorm(std::shared_ptr<const Impl> impl);

    /// F(y) = sqrt(y^T A y) with A symmetric positive definite.
    static FinslerNorm riemannian(Matrix A);

    /// F(y) = sqrt(y^T A y) + b.y with A symmetric positive definite and
    /// b^T A^-1 b < 1 (checked at construction).
    static FinslerNorm randers(Matrix A, Vector b);

    /// F(y) = (sum_i c_i y_i^m)^(1/m) with even m >= 4 and c_i > 0.
    /// Strong convexity of this family fails at the coordinate axes, which
    /// is exactly what makes it useful for exercising the audit.
    static FinslerNorm mth_root(int m, Vector coefficients);

    Eigen::Index dimension() const { return impl_->dimension(); }

    /// F(y). Throws DomainError for zero/non-finite/mis-sized arguments.
    double eval(const Vector& y) const;
    double operator()(const Vector& y) const { return eval(y); }

    /// Value, gradient and Hessian of F at y (the Hessian of F, not F^2).
    Jet2 jet(const Vector& y) const;

    Vector gradient(const Vector& y) const { return jet(y).gradient; }

    std::string definition() const { return impl_->definition(); }
    std::string name() const { return impl_->name(); }

private:
    std::shared_ptr<const Impl> impl_;
};

}  // namespace finsler
