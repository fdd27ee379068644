#include "finsler/norm.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "finsler/detail/format.hpp"

namespace finsler {

void require_direction(const Vector& v, Eigen::Index dim, const char* what) {
    if (v.size() != dim) {
        throw DomainError(std::string(what) + ": expected dimension " +
                          std::to_string(dim) + ", got " + std::to_string(v.size()));
    }
    if (!v.allFinite()) {
        throw DomainError(std::string(what) + ": components must be finite");
    }
    if (v.lpNorm<Eigen::Infinity>() < kZeroThreshold) {
        throw DomainError(std::string(what) +
                          ": norms are undefined at (and too near) the origin");
    }
}

FinslerNorm::FinslerNorm(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
    if (!impl_) throw DomainError("FinslerNorm: null implementation");
    if (impl_->dimension() < 2) throw DomainError("FinslerNorm: dimension must be >= 2");
}

double FinslerNorm::eval(const Vector& y) const {
    require_direction(y, dimension(), "norm argument");
    return impl_->value(y);
}

Jet2 FinslerNorm::jet(const Vector& y) const {
    require_direction(y, dimension(), "norm argument");
    return impl_->jet(y);
}

namespace {

// Validated symmetric positive definite matrix; symmetrized exactly.
Matrix checked_spd(Matrix A, const char* what) {
    if (A.rows() != A.cols() || A.rows() < 2) {
        throw DomainError(std::string(what) + ": expected a square matrix of size >= 2");
    }
    if (!A.allFinite()) throw DomainError(std::string(what) + ": entries must be finite");
    const double scale = A.cwiseAbs().maxCoeff();
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0)) {
        throw DomainError(std::string(what) + ": matrix is not symmetric");
    }
    A = ((A + A.transpose()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(A, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) <= 0.0) {
        throw DomainError(std::string(what) + ": matrix is not positive definite");
    }
    return A;
}

// y^T A y propagated through jets.
Jet2 quadratic_form_jet(const Matrix& A, const Vector& y) {
    const Eigen::Index n = y.size();
    std::vector<Jet2> v;
    v.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) v.push_back(Jet2::variable(y(i), n, i));
    Jet2 q = Jet2::constant(0.0, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (A(i, j) != 0.0) q = q + A(i, j) * (v[i] * v[j]);
        }
    }
    return q;
}

class RiemannianImpl final : public FinslerNorm::Impl {
public:
    explicit RiemannianImpl(Matrix A) : A_(checked_spd(std::move(A), "riemannian A")) {}

    Eigen::Index dimension() const override { return A_.rows(); }

    double value(const Vector& y) const override { return std::sqrt(y.dot(A_ * y)); }

    Jet2 jet(const Vector& y) const override { return sqrt(quadratic_form_jet(A_, y)); }

    std::string definition() const override {
        return "family = riemannian\nA = " + detail::format_matrix(A_) + "\n";
    }

    std::string name() const override { return "riemannian"; }

private:
    Matrix A_;
};

class RandersImpl final : public FinslerNorm::Impl {
public:
    RandersImpl(Matrix A, Vector b)
        : A_(checked_spd(std::move(A), "randers A")), b_(std::move(b)) {
        if (b_.size() != A_.rows()) throw DomainError("randers b: dimension mismatch with A");
        if (!b_.allFinite()) throw DomainError("randers b: components must be finite");
        // Admissibility b^T A^-1 b < 1 keeps F positive away from 0.
        const double bAb = b_.dot(A_.llt().solve(b_));
        if (!(bAb < 1.0)) {
            throw DomainError("randers b: inadmissible drift, b^T A^-1 b = " +
                              detail::format_real(bAb) + " >= 1");
        }
    }

    Eigen::Index dimension() const override { return A_.rows(); }

    double value(const Vector& y) const override {
        return std::sqrt(y.dot(A_ * y)) + b_.dot(y);
    }

    Jet2 jet(const Vector& y) const override {
        const Eigen::Index n = y.size();
        Jet2 f = sqrt(quadratic_form_jet(A_, y));
        for (Eigen::Index i = 0; i < n; ++i) {
            if (b_(i) != 0.0) f = f + b_(i) * Jet2::variable(y(i), n, i);
        }
        return f;
    }

    std::string definition() const override {
        return "family = randers\nA = " + detail::format_matrix(A_) +
               "\nb = " + detail::format_vector(b_) + "\n";
    }

    std::string name() const override { return "randers"; }

private:
    Matrix A_;
    Vector b_;
};

class MthRootImpl final : public FinslerNorm::Impl {
public:
    MthRootImpl(int m, Vector c) : m_(m), c_(std::move(c)) {
        if (m_ < 4 || m_ % 2 != 0) {
            throw DomainError("mth-root m: expected an even integer >= 4, got " +
                              std::to_string(m_));
        }
        if (c_.size() < 2 || !c_.allFinite() || (c_.array() <= 0.0).any()) {
            throw DomainError("mth-root c: expected >= 2 strictly positive coefficients");
        }
    }

    Eigen::Index dimension() const override { return c_.size(); }

    double value(const Vector& y) const override {
        double s = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            s += c_(i) * std::pow(y(i), m_);
        }
        return std::pow(s, 1.0 / m_);
    }

    Jet2 jet(const Vector& y) const override {
        const Eigen::Index n = y.size();
        Jet2 s = Jet2::constant(0.0, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            s = s + c_(i) * pow(Jet2::variable(y(i), n, i), m_);
        }
        return pow(s, 1, m_);
    }

    std::string definition() const override {
        return "family = mthroot\nm = " + std::to_string(m_) +
               "\nc = " + detail::format_vector(c_) + "\n";
    }

    std::string name() const override { return "mth-root"; }

private:
    int m_;
    Vector c_;
};

}  // namespace

FinslerNorm FinslerNorm::riemannian(Matrix A) {
    return FinslerNorm(std::make_shared<RiemannianImpl>(std::move(A)));
}

FinslerNorm FinslerNorm::randers(Matrix A, Vector b) {
    return FinslerNorm(std::make_shared<RandersImpl>(std::move(A), std::move(b)));
}

FinslerNorm FinslerNorm::mth_root(int m, Vector coefficients) {
    return FinslerNorm(std::make_shared<MthRootImpl>(m, std::move(coefficients)));
}

}  // namespace finsler
