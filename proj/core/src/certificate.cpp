#include "finsler/certificate.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "finsler/detail/format.hpp"
#include "finsler/indicatrix.hpp"
#include "finsler/norm_io.hpp"

namespace finsler {

namespace {
/// Spread gate for the finite-difference trust check in certify().
constexpr double kRefinementSpreadTol = 1e-5;
}  // namespace

std::string_view to_string(ViolationDirection d) {
    return d == ViolationDirection::matsumoto ? "matsumoto" : "reverse";
}

ViolationDirection direction_from_string(std::string_view s) {
    if (s == "matsumoto") return ViolationDirection::matsumoto;
    if (s == "reverse") return ViolationDirection::reverse;
    throw DomainError("unknown violation direction: " + std::string(s));
}

Matrix fd_fundamental_tensor(const FinslerNorm& norm, const Vector& y, double step) {
    if (!(step > 0.0)) throw DomainError("fd tensor: step must be positive");
    const Eigen::Index n = y.size();
    const auto f2 = [&](const Vector& v) {
        const double f = norm.eval(v);
        return f * f;
    };

    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Vector ei = step * Vector::Unit(n, i);
        g(i, i) = (f2(y + ei) - 2.0 * f2(y) + f2(y - ei)) / (step * step);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const Vector ej = step * Vector::Unit(n, j);
            const double cross = (f2(y + ei + ej) - f2(y + ei - ej) - f2(y - ei + ej) +
                                  f2(y - ei - ej)) /
                                 (4.0 * step * step);
            g(i, j) = cross;
            g(j, i) = cross;
        }
    }
    return g / 2.0;
}

double fd_relative_length(const FinslerNorm& norm, const Vector& xi, const Vector& y,
                          double step) {
    require_direction(xi, norm.dimension(), "relative length xi");
    const Matrix g = fd_fundamental_tensor(norm, y, step);
    const double q = xi.dot(g * xi);
    if (!(q > 0.0)) {
        throw ConvexityError("finite-difference tensor is not positive along xi (xi^T g xi = " +
                                 detail::format_real(q) + ")",
                             q);
    }
    return std::sqrt(q);
}

CertifyOutcome certify(const FinslerNorm& norm, const Vector& y, const Vector& xi,
                       const ToleranceConfig& tol) {
    tol.validate();
    require_direction(y, norm.dimension(), "certify y");
    require_direction(xi, norm.dimension(), "certify xi");

    CertifyOutcome out;
    out.y = indicatrix_point(norm, y);

    // Scale xi onto E(y): |xi|_y = 1 afterwards, so the verdict is F vs 1.
    const double rl = relative_length(norm, xi, out.y, tol);
    out.xi = xi / rl;
    out.F_xi = norm.eval(out.xi);
    out.rel_len = relative_length(norm, out.xi, out.y, tol);

    // Trust check: the Hessian behind rel_len, re-derived at three
    // increasing finite-difference steps, must agree. Steps grow rather
    // than shrink: below the base step the second difference is dominated
    // by cancellation noise.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const double h : {tol.fd_step, 2.0 * tol.fd_step, 4.0 * tol.fd_step}) {
        const double r = fd_relative_length(norm, out.xi, out.y, h);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (hi - lo > kRefinementSpreadTol) {
        throw NumericalError(
            "inconsistent Hessians across finite-difference refinement steps (spread " +
                detail::format_real(hi - lo) + "); the verdict cannot be trusted",
            hi - lo);
    }

    out.margin = std::abs(out.F_xi - out.rel_len);
    if (out.F_xi > out.rel_len + tol.certify_tol ||
        out.F_xi < out.rel_len - tol.certify_tol) {
        Certificate c;
        c.norm_definition = norm.definition();
        c.y = out.y;
        c.xi = out.xi;
        c.F_xi = out.F_xi;
        c.rel_len = out.rel_len;
        c.direction = out.F_xi > out.rel_len ? ViolationDirection::matsumoto
                                             : ViolationDirection::reverse;
        c.margin = out.margin;
        c.tolerances = tol;
        out.certificate = std::move(c);
    }
    return out;
}

bool homogeneity_check_certificate(const Certificate& c, double lambda,
                                   const ToleranceConfig& tol) {
    if (!(lambda > 0.0)) throw DomainError("homogeneity check: lambda must be positive");
    const FinslerNorm norm = parse_norm_definition(c.norm_definition);
    const double mu = 0.5 + lambda;  // unrelated scale for xi
    const CertifyOutcome again = certify(norm, lambda * c.y, mu * c.xi, tol);
    if (!again.violation()) return false;
    return again.certificate->direction == c.direction &&
           std::abs(again.margin - c.margin) <= 1e-8;
}

FdCheck verify_certificate_fd(const Certificate& c, const ToleranceConfig& tol) {
    const FinslerNorm norm = parse_norm_definition(c.norm_definition);
    FdCheck r;
    r.F_xi = norm.eval(c.xi);
    r.rel_len = fd_relative_length(norm, c.xi, c.y, tol.fd_step);
    r.margin = std::abs(r.F_xi - r.rel_len);
    const bool fd_matsumoto = r.F_xi > r.rel_len;
    r.direction_preserved =
        (c.direction == ViolationDirection::matsumoto) == fd_matsumoto;
    return r;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

void append_escaped(std::string& out, std::string_view s) {
    out += '"';
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void append_vector(std::string& out, const Vector& v) {
    out += '[';
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += detail::format_real(v(i));
    }
    out += ']';
}

void append_certificate(std::string& out, const Certificate& c, const std::string& pad) {
    out += pad + "{\n";
    out += pad + "  \"direction\": \"" + std::string(to_string(c.direction)) + "\",\n";
    out += pad + "  \"norm\": ";
    append_escaped(out, c.norm_definition);
    out += ",\n";
    out += pad + "  \"y\": ";
    append_vector(out, c.y);
    out += ",\n";
    out += pad + "  \"xi\": ";
    append_vector(out, c.xi);
    out += ",\n";
    out += pad + "  \"F_xi\": " + detail::format_real(c.F_xi) + ",\n";
    out += pad + "  \"rel_len\": " + detail::format_real(c.rel_len) + ",\n";
    out += pad + "  \"margin\": " + detail::format_real(c.margin) + ",\n";
    out += pad + "  \"tolerances\": {\n";
    out += pad + "    \"pd_tolerance\": " + detail::format_real(c.tolerances.pd_tolerance) + ",\n";
    out += pad + "    \"certify_tol\": " + detail::format_real(c.tolerances.certify_tol) + ",\n";
    out += pad + "    \"fd_step\": " + detail::format_real(c.tolerances.fd_step) + ",\n";
    out += pad + "    \"optimizer_grad_tol\": " +
           detail::format_real(c.tolerances.optimizer_grad_tol) + ",\n";
    out += pad + "    \"max_iters\": " + std::to_string(c.tolerances.max_iters) + "\n";
    out += pad + "  }\n";
    out += pad + "}";
}

std::string envelope(const std::vector<Certificate>& certs, const std::string& extra) {
    std::string out = "{\n  \"certificate_version\": 1,\n";
    if (!extra.empty()) out += extra;
    out += "  \"certificates\": [";
    for (std::size_t i = 0; i < certs.size(); ++i) {
        out += (i ? ",\n" : "\n");
        append_certificate(out, certs[i], "    ");
    }
    out += certs.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

}  // namespace

std::string certificates_to_json(const std::vector<Certificate>& certs) {
    return envelope(certs, "");
}

std::string certify_outcome_to_json(const CertifyOutcome& outcome) {
    std::string extra = "  \"verdict\": \"";
    extra += outcome.violation() ? "violation" : "no violation";
    extra += "\",\n  \"measured_margin\": " + detail::format_real(outcome.margin) + ",\n";
    std::vector<Certificate> certs;
    if (outcome.certificate) certs.push_back(*outcome.certificate);
    return envelope(certs, extra);
}

std::vector<Certificate> certificates_from_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("certificates JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("certificate_version", 0) != 1) {
        throw DomainError("certificates JSON: expected certificate_version 1");
    }

    std::vector<Certificate> certs;
    const auto as_vector = [](const nlohmann::json& arr) {
        Vector v(static_cast<Eigen::Index>(arr.size()));
        for (std::size_t i = 0; i < arr.size(); ++i) v(static_cast<Eigen::Index>(i)) = arr.at(i).get<double>();
        return v;
    };
    try {
        for (const auto& jc : doc.at("certificates")) {
            Certificate c;
            c.direction = direction_from_string(jc.at("direction").get<std::string>());
            c.norm_definition = jc.at("norm").get<std::string>();
            c.y = as_vector(jc.at("y"));
            c.xi = as_vector(jc.at("xi"));
            c.F_xi = jc.at("F_xi").get<double>();
            c.rel_len = jc.at("rel_len").get<double>();
            c.margin = jc.at("margin").get<double>();
            const auto& jt = jc.at("tolerances");
            c.tolerances.pd_tolerance = jt.at("pd_tolerance").get<double>();
            c.tolerances.certify_tol = jt.at("certify_tol").get<double>();
            c.tolerances.fd_step = jt.at("fd_step").get<double>();
            c.tolerances.optimizer_grad_tol = jt.at("optimizer_grad_tol").get<double>();
            c.tolerances.max_iters = jt.at("max_iters").get<int>();
            certs.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("certificates JSON: ") + e.what());
    }
    return certs;
}

}  // namespace finsler
