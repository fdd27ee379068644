#include "finsler/osculation.hpp"

#include <cmath>
#include <limits>

#include "finsler/detail/format.hpp"

namespace finsler {

Vector osculation_tangent(const FinslerNorm& norm, const Vector& y) {
    const Vector grad = norm.gradient(y);
    const double glen = grad.norm();
    if (!(glen > 0.0)) throw NumericalError("osculation: vanishing gradient at base point");
    const Vector normal = grad / glen;

    const Eigen::Index n = y.size();
    if (n == 2) {
        Vector tau(2);
        tau << -normal(1), normal(0);
        return tau;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        Vector tau = Vector::Unit(n, k) - normal(k) * normal;
        const double len = tau.norm();
        if (len > 0.1) return tau / len;
    }
    throw NumericalError("osculation: could not build a tangent direction");
}

std::vector<double> osculation_deltas(const FinslerNorm& norm, const Vector& y,
                                      const std::vector<double>& steps,
                                      const ToleranceConfig& tol) {
    const double f = norm.eval(y);
    if (std::abs(f - 1.0) > kIndicatrixTol) {
        throw PreconditionError("osculation: base point is not on the indicatrix (F(y) = " +
                                detail::format_real(f) + ")");
    }
    if (steps.empty()) throw DomainError("osculation: need at least one step");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!(steps[i] > 0.0)) throw DomainError("osculation: steps must be positive");
        if (i && !(steps[i] < steps[i - 1])) {
            throw DomainError("osculation: steps must be strictly decreasing");
        }
    }

    const Ellipsoid ell = osculating_ellipsoid(norm, y, tol);
    const Vector tau = osculation_tangent(norm, y);

    std::vector<double> deltas;
    deltas.reserve(steps.size());
    for (const double t : steps) {
        const Vector p = y + t * tau;
        try {
            const double len = p.norm();
            const double fp = norm.eval(p);
            const double q = ell.form_value(p);
            if (!(fp > 0.0) || !(q > 0.0)) {
                throw DomainError("probe ray misses a surface");
            }
            const double r_ind = len / fp;
            const double r_ell = len / std::sqrt(q);
            deltas.push_back(std::abs(r_ind - r_ell));
        } catch (const Error&) {
            deltas.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    return deltas;
}

}  // namespace finsler
