#pragma once

#include <optional>
#include <string>

#include "finsler/norm.hpp"
#include "finsler/tolerances.hpp"

namespace finsler::cli {

/// What cmd_plot draws: the indicatrix (solid) with the osculating ellipse
/// at the base point (dotted), plus an optional witness ray with F and
/// relative-length annotations. Planar norms only.
struct PlotSpec {
    FinslerNorm norm;
    Vector base_point;            // normalized onto the indicatrix internally
    std::optional<Vector> witness;
    int canvas_px = 640;
    int samples = 720;            // indicatrix polyline resolution (min 720)
    ToleranceConfig tol;
};

/// Renders the figure as SVG 1.1. Byte-deterministic for identical specs.
std::string render_svg(const PlotSpec& spec);

}  // namespace finsler::cli
