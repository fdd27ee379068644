#pragma once

// Shared helpers and independent oracles for the test suites. The oracles
// here (closed-form Randers tensor, finite-difference tensor of F^2) are
// deliberately written from scratch and never call the library paths they
// are used to check.

#include <cmath>
#include <functional>
#include <random>

#include "finsler/norm.hpp"

namespace finsler::test {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Vector random_box(std::mt19937_64& rng, Eigen::Index n, double lo = -2.0,
                         double hi = 2.0, double min_inf_norm = 0.2) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Vector v(n);
    do {
        for (Eigen::Index i = 0; i < n; ++i) v(i) = dist(rng);
    } while (v.lpNorm<Eigen::Infinity>() < min_inf_norm);
    return v;
}

// Well-conditioned random SPD matrix: eigenvalues in [0.5, 2].
inline Matrix random_spd(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = gauss(rng);
    }
    const Eigen::HouseholderQR<Matrix> qr(m);
    const Matrix q = qr.householderQ();
    std::uniform_real_distribution<double> eig(0.5, 2.0);
    Vector lambda(n);
    for (Eigen::Index i = 0; i < n; ++i) lambda(i) = eig(rng);
    return q * lambda.asDiagonal() * q.transpose();
}

// Closed-form Randers fundamental tensor:
//   g = (F/a) (A - (Ay)(Ay)^T / a^2) + l l^T,  l = Ay/a + b,  a = sqrt(y^T A y).
inline Matrix randers_tensor_oracle(const Matrix& A, const Vector& b, const Vector& y) {
    const double a = std::sqrt(y.dot(A * y));
    const Vector Ay = A * y;
    const Vector l = Ay / a + b;
    const double f = a + b.dot(y);
    return (f / a) * (A - (Ay * Ay.transpose()) / (a * a)) + l * l.transpose();
}

// Central finite differences of F^2, halved: an oracle for the fundamental
// tensor that shares no code with the library.
inline Matrix fd_tensor_oracle(const std::function<double(const Vector&)>& F,
                               const Vector& y, double h) {
    const Eigen::Index n = y.size();
    const auto f2 = [&](const Vector& v) {
        const double f = F(v);
        return f * f;
    };
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Vector ei = Vector::Zero(n);
        ei(i) = h;
        g(i, i) = (f2(y + ei) - 2.0 * f2(y) + f2(y - ei)) / (h * h);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            Vector ej = Vector::Zero(n);
            ej(j) = h;
            const double c =
                (f2(y + ei + ej) - f2(y + ei - ej) - f2(y - ei + ej) + f2(y - ei - ej)) /
                (4.0 * h * h);
            g(i, j) = c;
            g(j, i) = c;
        }
    }
    return g / 2.0;
}

// Central finite-difference gradient of F.
inline Vector fd_gradient_oracle(const std::function<double(const Vector&)>& F,
                                 const Vector& y, double h) {
    const Eigen::Index n = y.size();
    Vector g(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Vector ei = Vector::Zero(n);
        ei(i) = h;
        g(i) = (F(y + ei) - F(y - ei)) / (2.0 * h);
    }
    return g;
}

inline Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

inline Vector vec3(double a, double b, double c) {
    Vector v(3);
    v << a, b, c;
    return v;
}

inline Matrix mat2(double a, double b, double c, double d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace finsler::test
