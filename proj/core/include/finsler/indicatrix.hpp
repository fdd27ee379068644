#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "finsler/tensor.hpp"

namespace finsler {

/// Scale u onto the unit level set: u / F(u). Exact ray scaling, no
/// root-finding; idempotent on its own output.
Vector indicatrix_point(const FinslerNorm& norm, const Vector& u);

/// Directions where the point or its tensor could not be computed are
/// recorded instead of aborting the sweep.
struct IndicatrixDefect {
    std::size_t index;
    std::string message;
};

/// The indicatrix sampled over a deterministic direction grid, with the
/// spectral floor of g attached per point. Entries of defective directions
/// hold NaN.
struct IndicatrixSample {
    std::vector<Vector> directions;       // unit grid directions, grid order
    std::vector<Vector> points;           // direction / F(direction)
    std::vector<double> residuals;        // F(point) - 1
    std::vector<double> min_eigenvalues;  // of g at the point
    std::vector<bool> positive_definite;  // tensor passed the pd gate
    std::vector<IndicatrixDefect> defects;

    std::size_t size() const { return points.size(); }

    /// Smallest min-eigenvalue over non-defective points.
    double spectral_floor() const;
};

/// Deterministic unit-direction grid: uniform angles for n = 2, a Fibonacci
/// sphere for n = 3. Larger n is supported by the algebra but not by the
/// sampling grids.
std::vector<Vector> direction_grid(Eigen::Index dimension, int resolution);

/// Samples the indicatrix over direction_grid(norm.dimension(), resolution).
/// resolution must be >= 8.
IndicatrixSample sample_indicatrix(const FinslerNorm& norm, int resolution,
                                   const ToleranceConfig& tol = {});

/// CSV export: angle column(s), point components, F residual, min
/// eigenvalue. One row per grid direction, header row first.
void write_csv(std::ostream& out, const IndicatrixSample& sample);

/// Strong-convexity audit over the sampling grid.
struct AuditResult {
    IndicatrixSample sample;
    std::vector<std::size_t> failing;  // defective or non-positive-definite indices
    double spectral_floor = 0.0;

    bool strongly_convex() const { return failing.empty(); }
};

AuditResult audit_convexity(const FinslerNorm& norm, int resolution,
                            const ToleranceConfig& tol = {});

}  // namespace finsler
