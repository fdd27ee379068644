#pragma once

#include <vector>

#include "finsler/ellipsoid.hpp"

namespace finsler {

/// Radial gap between the indicatrix and the osculating ellipsoid at y,
/// probed along the tangent plane: for each step t the probe point is
/// y + t * tau (tau a fixed unit tangent direction at y), and the gap is
/// |r_ind(t) - r_ell(t)| where r_* is the distance from the origin to the
/// surface along the ray through the probe point.
///
/// Second-order contact means the gaps decay at least cubically; halving
/// the step should shrink the gap by a factor of about 8 or better.
///
/// Preconditions: y on the indicatrix (to 1e-8), steps positive and
/// strictly decreasing. A step whose ray misses either surface yields NaN
/// in its slot rather than aborting.
std::vector<double> osculation_deltas(const FinslerNorm& norm, const Vector& y,
                                      const std::vector<double>& steps,
                                      const ToleranceConfig& tol = {});

/// The tangent direction osculation_deltas probes along: for n = 2 the
/// 90-degree rotation of the unit normal, for n >= 3 the first coordinate
/// axis projected onto the tangent plane.
Vector osculation_tangent(const FinslerNorm& norm, const Vector& y);

}  // namespace finsler
