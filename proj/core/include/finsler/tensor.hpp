#pragma once

#include <optional>

#include "finsler/norm.hpp"
#include "finsler/tolerances.hpp"

namespace finsler {

/// g(y) = (1/2) d^2(F^2)/dy^2 at a base direction y: the y-dependent inner
/// product of the norm, with its spectral floor and (when positive
/// definite) lower-triangular Cholesky factor.
struct FundamentalTensor {
    Vector base_point;
    Matrix matrix;
    double min_eigenvalue = 0.0;
    /// Lower-triangular L with L L^T = matrix; present iff the tensor
    /// passed the positive-definiteness gate.
    std::optional<Matrix> cholesky;

    bool positive_definite() const { return cholesky.has_value(); }
};

/// Assembles g(y) = F(y) Hess F(y) + grad F(y) grad F(y)^T from one jet
/// evaluation (the product-rule expansion of half the Hessian of F^2).
FundamentalTensor fundamental_tensor(const FinslerNorm& norm, const Vector& y,
                                     const ToleranceConfig& tol = {});

/// |xi|_y = sqrt(xi^T g(y) xi). Throws ConvexityError (carrying the
/// offending eigenvalue) when g(y) is not positive definite.
double relative_length(const FinslerNorm& norm, const Vector& xi, const Vector& y,
                       const ToleranceConfig& tol = {});

}  // namespace finsler
