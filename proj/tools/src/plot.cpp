#include "plot.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "finsler/ellipsoid.hpp"
#include "finsler/indicatrix.hpp"
#include "finsler/tensor.hpp"

namespace finsler::cli {

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

Vector unit(double theta) {
    Vector u(2);
    u << std::cos(theta), std::sin(theta);
    return u;
}

struct Mapper {
    double scale, cx, cy;
    double X(const Vector& p) const { return cx + scale * p(0); }
    double Y(const Vector& p) const { return cy - scale * p(1); }
};

void append_polyline(std::string& out, const std::vector<Vector>& pts, const Mapper& m,
                     const char* style) {
    out += "  <polyline fill=\"none\" ";
    out += style;
    out += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ' ';
        out += px(m.X(pts[i])) + "," + px(m.Y(pts[i]));
    }
    out += "\"/>\n";
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
    if (spec.norm.dimension() != 2) {
        throw DomainError("plotting supports n = 2 only (got n = " +
                          std::to_string(spec.norm.dimension()) + ")");
    }
    if (spec.canvas_px < 64) throw DomainError("canvas size too small");
    const int samples = std::max(spec.samples, 720);

    const FinslerNorm& norm = spec.norm;
    const Vector y = indicatrix_point(norm, spec.base_point);
    const Ellipsoid ell = osculating_ellipsoid(norm, y, spec.tol);

    std::vector<Vector> indicatrix;
    indicatrix.reserve(samples + 1);
    for (int k = 0; k <= samples; ++k) {
        const double th = 2.0 * std::numbers::pi * k / samples;
        indicatrix.push_back(indicatrix_point(norm, unit(th)));
    }

    std::vector<Vector> ellipse;
    ellipse.reserve(samples + 1);
    for (int k = 0; k <= samples; ++k) {
        const double th = 2.0 * std::numbers::pi * k / samples;
        ellipse.push_back(ell.point(unit(th)));
    }

    std::optional<Vector> xi;
    double xi_F = 0.0, xi_rel = 0.0;
    if (spec.witness) {
        const double rl = relative_length(norm, *spec.witness, y, spec.tol);
        xi = *spec.witness / rl;  // on E(y)
        xi_F = norm.eval(*xi);
        xi_rel = relative_length(norm, *xi, y, spec.tol);
    }

    double radius = 0.0;
    for (const Vector& p : indicatrix) radius = std::max(radius, p.lpNorm<Eigen::Infinity>());
    for (const Vector& p : ellipse) radius = std::max(radius, p.lpNorm<Eigen::Infinity>());
    if (xi) radius = std::max(radius, xi->lpNorm<Eigen::Infinity>());
    radius *= 1.18;

    Mapper m{spec.canvas_px / (2.0 * radius), spec.canvas_px / 2.0, spec.canvas_px / 2.0};
    const std::string size = std::to_string(spec.canvas_px);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg version=\"1.1\" xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size +
           "\" height=\"" + size + "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
    out += "  <desc>indicatrix (solid) and osculating ellipsoid (dotted), " + norm.name() +
           " norm</desc>\n";
    out += "  <rect width=\"" + size + "\" height=\"" + size + "\" fill=\"white\"/>\n";

    // axes through the origin
    out += "  <line x1=\"0\" y1=\"" + px(m.cy) + "\" x2=\"" + size + "\" y2=\"" + px(m.cy) +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    out += "  <line x1=\"" + px(m.cx) + "\" y1=\"0\" x2=\"" + px(m.cx) + "\" y2=\"" + size +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    append_polyline(out, indicatrix, m, "stroke=\"black\" stroke-width=\"2\"");
    append_polyline(out, ellipse, m,
                    "stroke=\"#444444\" stroke-width=\"1.5\" stroke-dasharray=\"2,5\"");

    // base point marker
    out += "  <circle cx=\"" + px(m.X(y)) + "\" cy=\"" + px(m.Y(y)) +
           "\" r=\"4\" fill=\"black\"/>\n";
    out += "  <text x=\"" + px(m.X(y) + 8) + "\" y=\"" + px(m.Y(y) - 8) +
           "\" font-family=\"monospace\" font-size=\"13\">y</text>\n";

    if (xi) {
        const Vector origin = Vector::Zero(2);
        out += "  <line x1=\"" + px(m.X(origin)) + "\" y1=\"" + px(m.Y(origin)) + "\" x2=\"" +
               px(m.X(*xi)) + "\" y2=\"" + px(m.Y(*xi)) +
               "\" stroke=\"#aa0000\" stroke-width=\"1.5\"/>\n";
        out += "  <circle cx=\"" + px(m.X(*xi)) + "\" cy=\"" + px(m.Y(*xi)) +
               "\" r=\"4\" fill=\"#aa0000\"/>\n";
        out += "  <text x=\"12\" y=\"24\" font-family=\"monospace\" font-size=\"13\" "
               "fill=\"#aa0000\">F(xi) = " + fmt(xi_F) + "</text>\n";
        out += "  <text x=\"12\" y=\"42\" font-family=\"monospace\" font-size=\"13\" "
               "fill=\"#aa0000\">|xi|_y = " + fmt(xi_rel) + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace finsler::cli
