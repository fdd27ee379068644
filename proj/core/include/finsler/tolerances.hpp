#pragma once

#include "finsler/errors.hpp"

namespace finsler {

/// Numeric knobs shared across the library. All values are strictly
/// positive; the CLI maps its --tol flags onto this record.
struct ToleranceConfig {
    /// Positive-definiteness gate: g counts as definite when its smallest
    /// eigenvalue exceeds pd_tolerance times the largest |entry| of g.
    double pd_tolerance = 1e-10;
    /// Violation margins at or below this are reported as "no violation".
    double certify_tol = 1e-6;
    /// Base step for finite-difference cross-checks.
    double fd_step = 1e-5;
    /// Projected-gradient norm at which the ellipsoid optimizer stops.
    double optimizer_grad_tol = 1e-10;
    /// Iteration cap per optimizer restart.
    int max_iters = 500;

    void validate() const {
        if (!(pd_tolerance > 0) || !(certify_tol > 0) || !(fd_step > 0) ||
            !(optimizer_grad_tol > 0) || max_iters <= 0) {
            throw DomainError("tolerance configuration: all knobs must be strictly positive");
        }
    }
};

}  // namespace finsler
