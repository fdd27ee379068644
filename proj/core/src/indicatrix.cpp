#include "finsler/indicatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "finsler/detail/format.hpp"

namespace finsler {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

Vector indicatrix_point(const FinslerNorm& norm, const Vector& u) {
    const double f = norm.eval(u);
    if (!(f > 0.0) || !std::isfinite(f)) {
        throw DomainError("cannot scale onto the indicatrix: F(u) = " +
                          detail::format_real(f));
    }
    return u / f;
}

std::vector<Vector> direction_grid(Eigen::Index dimension, int resolution) {
    if (resolution < 8) throw DomainError("direction grid: resolution must be >= 8");
    std::vector<Vector> grid;
    grid.reserve(static_cast<std::size_t>(resolution));

    if (dimension == 2) {
        for (int k = 0; k < resolution; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / resolution;
            Vector u(2);
            u << std::cos(theta), std::sin(theta);
            grid.push_back(std::move(u));
        }
        return grid;
    }
    if (dimension == 3) {
        // Fibonacci sphere: near-uniform, deterministic.
        const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < resolution; ++k) {
            const double z = 1.0 - 2.0 * (k + 0.5) / resolution;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = golden_angle * k;
            Vector u(3);
            u << r * std::cos(phi), r * std::sin(phi), z;
            grid.push_back(std::move(u));
        }
        return grid;
    }
    throw DomainError("direction grids support n = 2 and n = 3 only (got n = " +
                      std::to_string(dimension) + ")");
}

IndicatrixSample sample_indicatrix(const FinslerNorm& norm, int resolution,
                                   const ToleranceConfig& tol) {
    IndicatrixSample s;
    s.directions = direction_grid(norm.dimension(), resolution);
    const std::size_t count = s.directions.size();
    s.points.resize(count);
    s.residuals.assign(count, kNaN);
    s.min_eigenvalues.assign(count, kNaN);
    s.positive_definite.assign(count, false);

    for (std::size_t i = 0; i < count; ++i) {
        try {
            const Vector p = indicatrix_point(norm, s.directions[i]);
            const FundamentalTensor t = fundamental_tensor(norm, p, tol);
            s.points[i] = p;
            s.residuals[i] = norm.eval(p) - 1.0;
            s.min_eigenvalues[i] = t.min_eigenvalue;
            s.positive_definite[i] = t.positive_definite();
        } catch (const Error& e) {
            s.points[i] = Vector::Constant(norm.dimension(), kNaN);
            s.defects.push_back({i, e.what()});
        }
    }
    return s;
}

double IndicatrixSample::spectral_floor() const {
    double m = std::numeric_limits<double>::infinity();
    for (const double v : min_eigenvalues) {
        if (std::isfinite(v)) m = std::min(m, v);
    }
    return m;
}

void write_csv(std::ostream& out, const IndicatrixSample& sample) {
    if (sample.directions.empty()) return;
    const Eigen::Index n = sample.directions.front().size();

    if (n == 2) {
        out << "angle";
    } else {
        out << "azimuth,polar";
    }
    for (Eigen::Index j = 0; j < n; ++j) out << ",p" << (j + 1);
    out << ",f_residual,min_eigenvalue\n";

    for (std::size_t i = 0; i < sample.size(); ++i) {
        const Vector& d = sample.directions[i];
        if (n == 2) {
            double theta = std::atan2(d(1), d(0));
            if (theta < 0) theta += 2.0 * std::numbers::pi;
            out << detail::format_real(theta);
        } else {
            double az = std::atan2(d(1), d(0));
            if (az < 0) az += 2.0 * std::numbers::pi;
            out << detail::format_real(az) << ','
                << detail::format_real(std::acos(std::clamp(d(2), -1.0, 1.0)));
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            out << ',' << detail::format_real(sample.points[i](j));
        }
        out << ',' << detail::format_real(sample.residuals[i]) << ','
            << detail::format_real(sample.min_eigenvalues[i]) << '\n';
    }
}

AuditResult audit_convexity(const FinslerNorm& norm, int resolution,
                            const ToleranceConfig& tol) {
    AuditResult r;
    r.sample = sample_indicatrix(norm, resolution, tol);
    for (const auto& defect : r.sample.defects) r.failing.push_back(defect.index);
    for (std::size_t i = 0; i < r.sample.size(); ++i) {
        if (std::isfinite(r.sample.min_eigenvalues[i]) && !r.sample.positive_definite[i]) {
            r.failing.push_back(i);
        }
    }
    std::sort(r.failing.begin(), r.failing.end());
    r.spectral_floor = r.sample.spectral_floor();
    return r;
}

}  // namespace finsler
