#include "finsler/ellipsoid_opt.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "finsler/detail/format.hpp"

namespace finsler {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;
constexpr double kMaxStepScale = 32.0;
constexpr int kFlatStreakLimit = 8;

std::vector<Vector> start_points(Eigen::Index n, int restarts, std::uint64_t seed) {
    std::vector<Vector> starts;
    starts.reserve(static_cast<std::size_t>(restarts));
    for (Eigen::Index i = 0; i < n && static_cast<int>(starts.size()) < restarts; ++i) {
        starts.push_back(Vector::Unit(n, i));
        if (static_cast<int>(starts.size()) < restarts) starts.push_back(-Vector::Unit(n, i));
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(starts.size()) < restarts) {
        Vector w(n);
        for (Eigen::Index i = 0; i < n; ++i) w(i) = gauss(rng);
        const double len = w.norm();
        if (len < 1e-6) continue;
        starts.push_back(w / len);
    }
    return starts;
}

EllipsoidExtremum extremize(const FinslerNorm& norm, const Ellipsoid& e, int restarts,
                            const ToleranceConfig& tol, std::uint64_t seed, double sign) {
    if (restarts < 1) throw DomainError("ellipsoid extremizer: restarts must be >= 1");
    tol.validate();
    const Matrix& L = e.inverse_sqrt();
    const Eigen::Index n = e.dimension();

    EllipsoidExtremum best;
    best.value = -std::numeric_limits<double>::infinity();
    bool have_best = false;

    for (const Vector& start : start_points(n, restarts, seed)) {
        Vector w = start;
        double step_scale = 1.0;
        bool converged = false;
        int flat_streak = 0;

        for (int it = 0; it < tol.max_iters; ++it) {
            ++best.iterations;
            const Vector eta = L * w;
            const Jet2 jet = norm.jet(eta);
            const double f = sign * jet.value;

            if (!have_best || f > best.value) {
                best.value = f;
                best.eta = eta;
                have_best = true;
            }

            const Vector grad_w = sign * (L.transpose() * jet.gradient);
            const Vector proj = grad_w - w.dot(grad_w) * w;
            const double gnorm = proj.norm();
            if (gnorm <= tol.optimizer_grad_tol) {
                converged = true;
                break;
            }

            // Backtracking ascent step on the sphere.
            double step = step_scale;
            bool accepted = false;
            double fn = f;
            for (int ls = 0; ls < kMaxBacktracks; ++ls) {
                Vector wn = w + step * proj;
                wn /= wn.norm();
                fn = sign * norm.eval(L * wn);
                if (fn >= f + kArmijo * step * gnorm * gnorm) {
                    w = wn;
                    step_scale = std::min(step * 2.0, kMaxStepScale);
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) {
                // Line search exhausted: the iterate is as good as this
                // start will get at working precision.
                converged = gnorm <= 1e3 * tol.optimizer_grad_tol;
                break;
            }

            // Once F changes only at the ulp level, the extremum is resolved
            // to machine precision even if the gradient norm has leveled off
            // above the nominal tolerance.
            const double flat_tol = 16.0 * std::numeric_limits<double>::epsilon() *
                                    std::max(1.0, std::abs(f));
            flat_streak = (std::abs(fn - f) <= flat_tol) ? flat_streak + 1 : 0;
            if (flat_streak >= kFlatStreakLimit) {
                converged = true;
                break;
            }
        }
        if (converged) ++best.converged_restarts;
    }

    if (best.converged_restarts == 0) {
        throw NumericalError(
            "ellipsoid extremizer did not converge in any of " + std::to_string(restarts) +
                " restarts (best value " + detail::format_real(sign * best.value) + ")",
            sign * best.value);
    }

    best.value *= sign;
    return best;
}

}  // namespace

EllipsoidExtremum max_F_on_ellipsoid(const FinslerNorm& norm, const Ellipsoid& e,
                                     int restarts, const ToleranceConfig& tol,
                                     std::uint64_t seed) {
    return extremize(norm, e, restarts, tol, seed, +1.0);
}

EllipsoidExtremum min_F_on_ellipsoid(const FinslerNorm& norm, const Ellipsoid& e,
                                     int restarts, const ToleranceConfig& tol,
                                     std::uint64_t seed) {
    return extremize(norm, e, restarts, tol, seed, -1.0);
}

}  // namespace finsler
