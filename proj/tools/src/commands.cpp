#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "finsler/certificate.hpp"
#include "finsler/detail/format.hpp"
#include "finsler/norm_io.hpp"
#include "finsler/scan.hpp"
#include "plot.hpp"

namespace finsler::cli {

namespace {

Vector parse_vector_arg(const std::string& text) {
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string piece = text.substr(pos, comma - pos);
        char* end = nullptr;
        const double v = std::strtod(piece.c_str(), &end);
        if (end == piece.c_str() || *end != '\0') {
            throw DomainError("cannot parse vector component '" + piece +
                              "' (expected comma-separated reals, e.g. \"0,1\")");
        }
        vals.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (vals.size() < 2) {
        throw DomainError("vectors need at least two components, got '" + text + "'");
    }
    return Eigen::Map<Vector>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + path);
    out << content;
    if (!out) throw DomainError("failed writing output file: " + path);
}

}  // namespace

int cmd_audit(const CommonOptions& opt, const std::optional<std::string>& csv_out) {
    const FinslerNorm norm = load_norm_file(opt.norm_file);
    const AuditResult audit = audit_convexity(norm, opt.resolution, opt.tol);

    double worst = std::numeric_limits<double>::infinity();
    std::size_t worst_index = 0;
    double sum = 0.0;
    std::size_t counted = 0;
    for (std::size_t i = 0; i < audit.sample.size(); ++i) {
        const double v = audit.sample.min_eigenvalues[i];
        if (!std::isfinite(v)) continue;
        if (v < worst) { worst = v; worst_index = i; }
        sum += v;
        ++counted;
    }

    std::cout << "norm: " << norm.name() << " (n = " << norm.dimension() << ")\n";
    std::cout << "grid: " << audit.sample.size() << " directions, " << counted
              << " with tensors, " << audit.sample.defects.size() << " defects\n";
    if (counted > 0) {
        std::cout << "min eigenvalue of g over grid: " << detail::format_real(worst)
                  << " (at grid index " << worst_index << "), mean "
                  << detail::format_real(sum / counted) << "\n";
    }

    if (csv_out) {
        std::ostringstream csv;
        write_csv(csv, audit.sample);
        write_file(*csv_out, csv.str());
        std::cout << "csv written to " << *csv_out << "\n";
    }

    if (!audit.strongly_convex()) {
        std::cout << "strong convexity FAILED at " << audit.failing.size()
                  << " direction(s):";
        std::size_t shown = 0;
        for (const std::size_t i : audit.failing) {
            if (shown++ == 12) { std::cout << " ..."; break; }
            std::cout << " " << i;
            if (std::isfinite(audit.sample.min_eigenvalues[i])) {
                std::cout << " (min eig " << detail::format_real(audit.sample.min_eigenvalues[i])
                          << ")";
            } else {
                std::cout << " (defect)";
            }
        }
        std::cout << "\n";
        return kExitConvexity;
    }
    std::cout << "strongly convex on the grid\n";
    return kExitOk;
}

int cmd_scan(const CommonOptions& opt, const std::string& certificates_out) {
    const FinslerNorm norm = load_norm_file(opt.norm_file);
    const ScanReport report = scan(norm, opt.resolution, opt.restarts, opt.tol, opt.seed);

    std::cout << "norm: " << norm.name() << " (n = " << norm.dimension() << ")\n";
    std::cout << "resolution " << report.resolution << ", restarts " << report.restarts
              << ", seed " << report.seed << "\n";
    std::cout << "convexity: min eigenvalue of g over grid = "
              << detail::format_real(report.spectral_floor) << "\n";

    const auto describe = [&](const char* label, const DirectionalScan& side) {
        std::cout << label << ": " << side.violations << "/" << side.margins.size()
                  << " grid points violate; best margin "
                  << detail::format_real(side.best_margin) << " at grid index "
                  << side.best_index;
        if (side.best) {
            std::cout << " (F_xi " << detail::format_real(side.best->F_xi) << ", |xi|_y "
                      << detail::format_real(side.best->rel_len) << ")";
        }
        std::cout << "\n";
    };
    describe("matsumoto direction (F(xi) > |xi|_y)", report.matsumoto);
    describe("reverse direction  (F(xi) < |xi|_y)", report.reverse);

    if (!report.defects.empty()) {
        std::cout << report.defects.size() << " grid defect(s); first at index "
                  << report.defects.front().grid_index << ": "
                  << report.defects.front().message << "\n";
    }
    std::cout << "wall time: " << detail::format_real(report.wall_seconds) << " s\n";

    write_file(certificates_out, certificates_to_json(report.certificates()));
    std::cout << "certificates written to " << certificates_out << " ("
              << report.certificates().size() << " entries)\n";
    return kExitOk;
}

int cmd_certify(const CommonOptions& opt, const std::string& y_text,
                const std::string& xi_text, const std::optional<std::string>& json_out) {
    const FinslerNorm norm = load_norm_file(opt.norm_file);
    const Vector y = parse_vector_arg(y_text);
    const Vector xi = parse_vector_arg(xi_text);

    const CertifyOutcome out = certify(norm, y, xi, opt.tol);
    const std::string json = certify_outcome_to_json(out);
    if (json_out) {
        write_file(*json_out, json);
    } else {
        std::cout << json;
    }

    if (out.violation()) {
        std::cerr << "violation (" << to_string(out.certificate->direction) << "): F(xi) = "
                  << detail::format_real(out.F_xi) << " vs |xi|_y = "
                  << detail::format_real(out.rel_len) << ", margin "
                  << detail::format_real(out.margin) << "\n";
        return kExitOk;
    }
    std::cerr << "no violation: measured margin " << detail::format_real(out.margin)
              << " is within certify_tol " << detail::format_real(opt.tol.certify_tol) << "\n";
    return kExitNoViolation;
}

int cmd_recheck(const CommonOptions& opt, const std::string& certificates_file) {
    std::ifstream in(certificates_file, std::ios::binary);
    if (!in) throw DomainError("cannot open certificates file: " + certificates_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::vector<Certificate> certs = certificates_from_json(buf.str());

    if (certs.empty()) {
        std::cout << "no certificates to recheck\n";
        return kExitOk;
    }

    std::size_t reproduced = 0;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        const Certificate& c = certs[i];
        const FinslerNorm norm = parse_norm_definition(c.norm_definition);

        // Recompute the stored fields at the stored scaling of xi; the
        // verdict must survive with the certificate's own tolerances.
        const double F_xi = norm.eval(c.xi);
        const double rel = relative_length(norm, c.xi, c.y, c.tolerances);
        const double margin = std::abs(F_xi - rel);
        const ViolationDirection dir =
            F_xi > rel ? ViolationDirection::matsumoto : ViolationDirection::reverse;

        const bool ok = dir == c.direction && margin > c.tolerances.certify_tol &&
                        std::abs(F_xi - c.F_xi) <= 1e-9 &&
                        std::abs(rel - c.rel_len) <= 1e-9 &&
                        std::abs(margin - c.margin) <= 1e-9;
        std::cout << "certificate " << i << " (" << to_string(c.direction) << "): "
                  << (ok ? "reproduced" : "MISMATCH") << ", margin "
                  << detail::format_real(margin) << "\n";
        if (ok) ++reproduced;
    }
    if (reproduced != certs.size()) {
        std::cout << reproduced << "/" << certs.size() << " certificates reproduced\n";
        return kExitNoViolation;
    }
    std::cout << "all " << certs.size() << " certificate(s) reproduced\n";
    return kExitOk;
}

int cmd_plot(const CommonOptions& opt, const std::string& y_text,
             const std::optional<std::string>& xi_text, const std::string& svg_out,
             int canvas_px, int samples) {
    PlotSpec spec{load_norm_file(opt.norm_file), parse_vector_arg(y_text), std::nullopt,
                  canvas_px, samples, opt.tol};
    if (xi_text) spec.witness = parse_vector_arg(*xi_text);

    write_file(svg_out, render_svg(spec));
    std::cout << "figure written to " << svg_out << "\n";
    return kExitOk;
}

}  // namespace finsler::cli
