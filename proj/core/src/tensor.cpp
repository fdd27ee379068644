#include "finsler/tensor.hpp"

#include <cmath>

#include "finsler/detail/format.hpp"

namespace finsler {

FundamentalTensor fundamental_tensor(const FinslerNorm& norm, const Vector& y,
                                     const ToleranceConfig& tol) {
    const Jet2 jet = norm.jet(y);

    FundamentalTensor t;
    t.base_point = y;
    t.matrix = jet.value * jet.hessian;
    t.matrix += jet.gradient * jet.gradient.transpose();

    Eigen::SelfAdjointEigenSolver<Matrix> es(t.matrix, Eigen::EigenvaluesOnly);
    t.min_eigenvalue = es.eigenvalues()(0);

    const double scale = t.matrix.cwiseAbs().maxCoeff();
    if (t.min_eigenvalue > tol.pd_tolerance * scale) {
        Eigen::LLT<Matrix> llt(t.matrix);
        if (llt.info() == Eigen::Success) t.cholesky = Matrix(llt.matrixL());
    }
    return t;
}

double relative_length(const FinslerNorm& norm, const Vector& xi, const Vector& y,
                       const ToleranceConfig& tol) {
    require_direction(xi, norm.dimension(), "relative length xi");
    const FundamentalTensor t = fundamental_tensor(norm, y, tol);
    if (!t.positive_definite()) {
        throw ConvexityError(
            "fundamental tensor is not positive definite at the base direction "
            "(min eigenvalue " + detail::format_real(t.min_eigenvalue) + ")",
            t.min_eigenvalue);
    }
    return std::sqrt(xi.dot(t.matrix * xi));
}

}  // namespace finsler
