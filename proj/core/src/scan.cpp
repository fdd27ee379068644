#include "finsler/scan.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "finsler/detail/format.hpp"
#include "finsler/ellipsoid_opt.hpp"

namespace finsler {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Candidate {
    double margin = kNaN;
    Vector xi_unit;
    double F_xi = 0.0;
    double rel_len = 0.0;
};

// Margin of the extremal point, evaluated at xi scaled to Euclidean unit
// length. Margins are 1-homogeneous in xi; the unit sphere fixes the scale.
Candidate unit_scale_candidate(const FinslerNorm& norm, const Matrix& g,
                               const Vector& eta, double sign) {
    Candidate c;
    c.xi_unit = eta / eta.norm();
    c.F_xi = norm.eval(c.xi_unit);
    c.rel_len = std::sqrt(c.xi_unit.dot(g * c.xi_unit));
    c.margin = sign * (c.F_xi - c.rel_len);
    return c;
}

void record(DirectionalScan& side, const Candidate& c, std::size_t index, bool violated,
            const FinslerNorm& norm, const Vector& y, ViolationDirection dir,
            const ToleranceConfig& tol) {
    side.margins[index] = c.margin;
    if (c.margin > side.best_margin || std::isnan(side.best_margin)) {
        side.best_margin = c.margin;
        side.best_index = index;
    }
    if (!violated || !(c.margin > tol.certify_tol)) return;
    ++side.violations;
    if (!side.best || c.margin > side.best->margin) {
        Certificate cert;
        cert.norm_definition = norm.definition();
        cert.y = y;
        cert.xi = c.xi_unit;
        cert.F_xi = c.F_xi;
        cert.rel_len = c.rel_len;
        cert.direction = dir;
        cert.margin = c.margin;
        cert.tolerances = tol;
        side.best = std::move(cert);
    }
}

}  // namespace

std::vector<Certificate> ScanReport::certificates() const {
    std::vector<Certificate> out;
    if (matsumoto.best) out.push_back(*matsumoto.best);
    if (reverse.best) out.push_back(*reverse.best);
    return out;
}

ScanReport scan(const FinslerNorm& norm, int resolution, int restarts,
                const ToleranceConfig& tol, std::uint64_t seed) {
    tol.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const AuditResult audit = audit_convexity(norm, resolution, tol);
    if (!audit.strongly_convex()) {
        std::string what =
            "scan requires a strongly convex indicatrix; audit failed at " +
            std::to_string(audit.failing.size()) + " of " + std::to_string(resolution) +
            " grid directions (spectral floor " +
            detail::format_real(audit.spectral_floor) + "); failing indices:";
        for (std::size_t i = 0; i < audit.failing.size() && i < 16; ++i) {
            what += " " + std::to_string(audit.failing[i]);
        }
        if (audit.failing.size() > 16) what += " ...";
        throw ConvexityError(what, audit.spectral_floor, audit.failing);
    }

    ScanReport report;
    report.norm_definition = norm.definition();
    report.resolution = resolution;
    report.restarts = restarts;
    report.seed = seed;
    report.spectral_floor = audit.spectral_floor;

    const std::size_t count = audit.sample.size();
    report.matsumoto.margins.assign(count, kNaN);
    report.reverse.margins.assign(count, kNaN);
    report.matsumoto.best_margin = -std::numeric_limits<double>::infinity();
    report.reverse.best_margin = -std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < count; ++i) {
        const Vector& y = audit.sample.points[i];
        try {
            const FundamentalTensor t = fundamental_tensor(norm, y, tol);
            const Ellipsoid e(t.matrix, tol.pd_tolerance);

            const EllipsoidExtremum mx = max_F_on_ellipsoid(norm, e, restarts, tol, seed);
            record(report.matsumoto,
                   unit_scale_candidate(norm, t.matrix, mx.eta, +1.0), i,
                   mx.value > 1.0 + tol.certify_tol, norm, y,
                   ViolationDirection::matsumoto, tol);

            const EllipsoidExtremum mn = min_F_on_ellipsoid(norm, e, restarts, tol, seed);
            record(report.reverse,
                   unit_scale_candidate(norm, t.matrix, mn.eta, -1.0), i,
                   mn.value < 1.0 - tol.certify_tol, norm, y,
                   ViolationDirection::reverse, tol);
        } catch (const Error& e) {
            report.defects.push_back({i, e.what()});
        }
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace finsler
