#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finsler/certificate.hpp"
#include "finsler/indicatrix.hpp"

namespace finsler {

struct ScanDefect {
    std::size_t grid_index;
    std::string message;
};

/// Per-direction results of one inequality side. Margins are signed
/// (positive = violated) and evaluated at the Euclidean-unit scaling of
/// the extremal direction, the canonical scale for comparing across grid
/// points; entries of defective grid points hold NaN.
struct DirectionalScan {
    std::vector<double> margins;
    std::size_t violations = 0;
    double best_margin = 0.0;
    std::size_t best_index = 0;
    std::optional<Certificate> best;  ///< strongest violation, if any
};

/// Aggregate result of a grid sweep over indicatrix base points.
struct ScanReport {
    std::string norm_definition;
    int resolution = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
    DirectionalScan matsumoto;
    DirectionalScan reverse;
    double spectral_floor = 0.0;  ///< min eigenvalue of g over the grid
    std::vector<ScanDefect> defects;
    double wall_seconds = 0.0;

    /// The global best certificates, at most one per direction.
    std::vector<Certificate> certificates() const;
};

/// Sweeps the indicatrix grid: at every base point y builds E(y) and
/// extremizes F over it; any max above 1 + certify_tol yields a
/// matsumoto-direction violation, any min below 1 - certify_tol a
/// reverse-direction one. Requires the strong-convexity audit to pass on
/// the grid first (throws ConvexityError listing the failing directions
/// otherwise). Optimizer failures at single grid points become defect
/// entries, not aborts. Deterministic for fixed inputs and seed; grid
/// points are processed and reported in grid order.
ScanReport scan(const FinslerNorm& norm, int resolution, int restarts,
                const ToleranceConfig& tol = {}, std::uint64_t seed = 0);

}  // namespace finsler
