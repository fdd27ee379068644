#include <doctest.h>

#include "finsler/jet.hpp"
#include "support.hpp"

using namespace finsler;
using test::vec2;

TEST_CASE("jet seeds") {
    const Jet2 c = Jet2::constant(3.5, 2);
    CHECK(c.value == 3.5);
    CHECK(c.gradient.isZero(0.0));
    CHECK(c.hessian.isZero(0.0));

    const Jet2 x = Jet2::variable(2.0, 2, 0);
    CHECK(x.value == 2.0);
    CHECK(x.gradient(0) == 1.0);
    CHECK(x.gradient(1) == 0.0);
    CHECK(x.hessian.isZero(0.0));
}

TEST_CASE("product rule") {
    // f(x, y) = x * y at (2, 3): grad (3, 2), hessian [[0,1],[1,0]].
    const Jet2 x = Jet2::variable(2.0, 2, 0);
    const Jet2 y = Jet2::variable(3.0, 2, 1);
    const Jet2 f = x * y;
    CHECK(f.value == 6.0);
    CHECK(f.gradient(0) == 3.0);
    CHECK(f.gradient(1) == 2.0);
    CHECK(f.hessian(0, 1) == 1.0);
    CHECK(f.hessian(1, 0) == 1.0);
    CHECK(f.hessian(0, 0) == 0.0);
}

TEST_CASE("quotient and scalar mixing") {
    // f(x, y) = (3x + 1) / y at (2, 4): value 7/4.
    const Jet2 x = Jet2::variable(2.0, 2, 0);
    const Jet2 y = Jet2::variable(4.0, 2, 1);
    const Jet2 f = (3.0 * x + 1.0) / y;
    CHECK(f.value == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(f.gradient(0) == doctest::Approx(0.75).epsilon(1e-15));          // 3/y
    CHECK(f.gradient(1) == doctest::Approx(-7.0 / 16.0).epsilon(1e-15));   // -(3x+1)/y^2
    CHECK(f.hessian(1, 1) == doctest::Approx(14.0 / 64.0).epsilon(1e-15)); // 2(3x+1)/y^3
    CHECK(f.hessian(0, 1) == doctest::Approx(-3.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("euclidean norm jet at (1,0)") {
    // F = sqrt(x^2 + y^2): unit circle has curvature 1, so the Hessian at
    // (1,0) is [[0,0],[0,1]].
    const Jet2 x = Jet2::variable(1.0, 2, 0);
    const Jet2 y = Jet2::variable(0.0, 2, 1);
    const Jet2 f = sqrt(x * x + y * y);
    CHECK(f.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f.gradient(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f.gradient(1) == 0.0);
    CHECK(f.hessian(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f.hessian(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("jet derivatives match finite differences on a messy composite") {
    auto f = [](const Vector& v) {
        return std::pow(v(0) * v(0) + 2.0 * v(1) * v(1) + 0.5, 0.75) +
               v(0) * v(1) / (v(1) * v(1) + 2.0) + std::sqrt(v(0) * v(0) + 4.0);
    };
    auto jet_f = [](const Vector& v) {
        const Jet2 x = Jet2::variable(v(0), 2, 0);
        const Jet2 y = Jet2::variable(v(1), 2, 1);
        return pow(x * x + 2.0 * (y * y) + 0.5, 3, 4) + (x * y) / (y * y + 2.0) +
               sqrt(x * x + 4.0);
    };

    auto rng = test::make_rng(7);
    for (int k = 0; k < 25; ++k) {
        const Vector v = test::random_box(rng, 2, -1.5, 1.5);
        const Jet2 j = jet_f(v);
        CHECK(j.value == doctest::Approx(f(v)).epsilon(1e-12));

        const Vector g = test::fd_gradient_oracle(f, v, 1e-5);
        CHECK((j.gradient - g).lpNorm<Eigen::Infinity>() < 1e-8);

        // second derivatives against a finite-difference Hessian of f
        const Eigen::Index n = 2;
        for (Eigen::Index a = 0; a < n; ++a) {
            for (Eigen::Index b = 0; b < n; ++b) {
                const double h = 1e-4;
                Vector ea = Vector::Zero(n), eb = Vector::Zero(n);
                ea(a) = h;
                eb(b) = h;
                const double fd =
                    (f(v + ea + eb) - f(v + ea - eb) - f(v - ea + eb) + f(v - ea - eb)) /
                    (4 * h * h);
                CHECK(j.hessian(a, b) == doctest::Approx(fd).epsilon(5e-5).scale(1.0));
            }
        }
    }
}

TEST_CASE("hessian symmetry is exact, not approximate") {
    auto rng = test::make_rng(11);
    for (int k = 0; k < 50; ++k) {
        const Vector v = test::random_box(rng, 3, -2, 2);
        const Jet2 x = Jet2::variable(v(0), 3, 0);
        const Jet2 y = Jet2::variable(v(1), 3, 1);
        const Jet2 z = Jet2::variable(v(2), 3, 2);
        const Jet2 f =
            sqrt(x * x + y * y + z * z + 0.3) * (x + 2.0) / (z * z + 1.5) + pow(y * y + 1.0, 5, 2);
        CHECK((f.hessian - f.hessian.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("rational powers") {
    const Jet2 x = Jet2::variable(16.0, 2, 0);
    const Jet2 f = pow(x, 1, 4);
    CHECK(f.value == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(f.gradient(0) == doctest::Approx(1.0 / 32.0).epsilon(1e-14));

    const Jet2 g = pow(x, -1, 2);
    CHECK(g.value == doctest::Approx(0.25).epsilon(1e-15));

    // integer powers accept negative bases
    const Jet2 m = Jet2::variable(-2.0, 2, 0);
    CHECK(pow(m, 3).value == doctest::Approx(-8.0));
    CHECK(pow(m, 3).gradient(0) == doctest::Approx(12.0));
    CHECK(pow(m, 4).hessian(0, 0) == doctest::Approx(48.0));

    // exponent zero is the constant 1
    CHECK(pow(m, 0).value == 1.0);
    CHECK(pow(m, 0).gradient.isZero(0.0));
}

TEST_CASE("jet domain errors") {
    const Jet2 zero = Jet2::constant(0.0, 2);
    const Jet2 neg = Jet2::constant(-1.0, 2);
    CHECK_THROWS_AS((void)sqrt(zero), DomainError);
    CHECK_THROWS_AS((void)sqrt(neg), DomainError);
    CHECK_THROWS_AS((void)(Jet2::constant(1.0, 2) / zero), DomainError);
    CHECK_THROWS_AS((void)pow(neg, 1, 2), DomainError);
    CHECK_THROWS_AS((void)pow(zero, -2), DomainError);
    CHECK_THROWS_AS((void)pow(zero, 1, 0), DomainError);
}
