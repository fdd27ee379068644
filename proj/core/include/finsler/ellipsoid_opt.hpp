#pragma once

#include <cstdint>

#include "finsler/ellipsoid.hpp"

namespace finsler {

/// Outcome of extremizing F over an ellipsoid.
struct EllipsoidExtremum {
    double value = 0.0;  ///< F at eta
    Vector eta;          ///< extremal point, on the ellipsoid
    int converged_restarts = 0;
    int iterations = 0;  ///< ascent iterations across all restarts
};

/// max (resp. min) of F over {eta : eta^T G eta = 1}, computed as an
/// extremum of F(L w) over the unit sphere |w| = 1 by projected gradient
/// ascent with backtracking line search and `restarts` deterministic
/// multistarts (the +-axis starts first, then seeded random directions).
///
/// Throws NumericalError (carrying the best value seen) when no restart
/// reaches the gradient tolerance within tol.max_iters iterations.
EllipsoidExtremum max_F_on_ellipsoid(const FinslerNorm& norm, const Ellipsoid& e,
                                     int restarts, const ToleranceConfig& tol = {},
                                     std::uint64_t seed = 0);

EllipsoidExtremum min_F_on_ellipsoid(const FinslerNorm& norm, const Ellipsoid& e,
                                     int restarts, const ToleranceConfig& tol = {},
                                     std::uint64_t seed = 0);

}  // namespace finsler
