#include "finsler/ellipsoid.hpp"

#include <cmath>

#include "finsler/detail/format.hpp"

namespace finsler {

Ellipsoid::Ellipsoid(Matrix G, double pd_tolerance) : G_(std::move(G)) {
    if (G_.rows() != G_.cols() || G_.rows() < 2 || !G_.allFinite()) {
        throw DomainError("ellipsoid form must be a finite square matrix of size >= 2");
    }
    const double scale = G_.cwiseAbs().maxCoeff();
    if ((G_ - G_.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(scale, 1.0)) {
        throw DomainError("ellipsoid form must be symmetric");
    }
    G_ = ((G_ + G_.transpose()) / 2.0).eval();

    Eigen::SelfAdjointEigenSolver<Matrix> es(G_);
    min_eigenvalue_ = es.eigenvalues()(0);
    if (!(min_eigenvalue_ > pd_tolerance * scale)) {
        throw ConvexityError("ellipsoid form is not positive definite (min eigenvalue " +
                                 detail::format_real(min_eigenvalue_) + ")",
                             min_eigenvalue_);
    }
    inverse_sqrt_ = es.eigenvectors() *
                    es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                    es.eigenvectors().transpose();
}

Ellipsoid osculating_ellipsoid(const FinslerNorm& norm, const Vector& y,
                               const ToleranceConfig& tol) {
    const double f = norm.eval(y);
    if (std::abs(f - 1.0) > kIndicatrixTol) {
        throw PreconditionError(
            "osculating ellipsoid: base point is not on the indicatrix (F(y) = " +
            detail::format_real(f) + "); normalize with indicatrix_point first");
    }
    const FundamentalTensor t = fundamental_tensor(norm, y, tol);
    if (!t.positive_definite()) {
        throw ConvexityError(
            "osculating ellipsoid: fundamental tensor is degenerate at the base point "
            "(min eigenvalue " + detail::format_real(t.min_eigenvalue) + ")",
            t.min_eigenvalue);
    }
    return Ellipsoid(t.matrix, tol.pd_tolerance);
}

}  // namespace finsler
