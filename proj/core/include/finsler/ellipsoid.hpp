#pragma once

#include "finsler/tensor.hpp"

namespace finsler {

/// Origin-centered quadratic-form level set {eta : eta^T G eta = 1} with G
/// symmetric positive definite. Carries the symmetric factor L = G^(-1/2)
/// (so L L^T = G^-1), which maps the unit sphere onto the ellipsoid:
/// eta = L w with |w| = 1.
class Ellipsoid {
public:
    /// Validates symmetry and positive definiteness (relative gate
    /// pd_tolerance * max |G|); throws ConvexityError otherwise.
    explicit Ellipsoid(Matrix G, double pd_tolerance = 1e-10);

    Eigen::Index dimension() const { return G_.rows(); }
    const Matrix& quadratic_form() const { return G_; }
    const Matrix& inverse_sqrt() const { return inverse_sqrt_; }
    double min_form_eigenvalue() const { return min_eigenvalue_; }

    /// eta = L w; carries the unit sphere onto the ellipsoid.
    Vector point(const Vector& w) const { return inverse_sqrt_ * w; }

    /// eta^T G eta.
    double form_value(const Vector& eta) const { return eta.dot(G_ * eta); }

private:
    Matrix G_;
    Matrix inverse_sqrt_;
    double min_eigenvalue_;
};

/// Tolerance for "y lies on the indicatrix" preconditions.
inline constexpr double kIndicatrixTol = 1e-8;

/// The ellipsoid of the inner product g(y) at a base point y on the
/// indicatrix: passes through y and is tangent to the indicatrix there,
/// with second-order contact. Throws PreconditionError when F(y) is not 1
/// (callers normalize via indicatrix_point) and ConvexityError when g(y)
/// fails the positive-definiteness gate.
Ellipsoid osculating_ellipsoid(const FinslerNorm& norm, const Vector& y,
                               const ToleranceConfig& tol = {});

}  // namespace finsler
