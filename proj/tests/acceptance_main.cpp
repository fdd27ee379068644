// Acceptance suite: one criterion per run_criterion call, one [PASS]/[FAIL]
// line each, nonzero exit if anything fails. Expected values come from
// closed forms (the Randers tensor g = (F/a)(A - (Ay)(Ay)^T/a^2) + l l^T
// gives g((0,1)) = [[1.25, 0.5], [0.5, 1]] for A = I, b = (0.5, 0), hence
// F((1,0)/sqrt(1.25)) = 1.5/sqrt(1.25) = 1.3416407864998738 and
// 0.5/sqrt(1.25) = 0.4472135954999579, with unit-xi margins
// 1.5 - sqrt(1.25) = 0.3819660112501051 and sqrt(1.25) - 0.5 =
// 0.6180339887498949) or from independent finite-difference oracles.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "finsler/certificate.hpp"
#include "finsler/dsl.hpp"
#include "finsler/indicatrix.hpp"
#include "finsler/norm_io.hpp"
#include "finsler/osculation.hpp"
#include "finsler/scan.hpp"
#include "support.hpp"

using namespace finsler;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void run_criterion(const char* id, const char* description,
                   const std::function<std::string()>& body) {
    std::string detail;
    bool passed = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        passed = false;
        detail = std::string("exception: ") + e.what();
    }
    if (!detail.empty() && detail.rfind("FAIL:", 0) == 0) {
        passed = false;
        detail = detail.substr(5);
    }
    std::printf("[%s] %s: %s (%s)\n", passed ? "PASS" : "FAIL", id, description,
                detail.c_str());
    std::fflush(stdout);
    if (!passed) ++g_failures;
}

std::string fail(const std::string& why) { return "FAIL:" + why; }

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Vector vec2(double a, double b) { return test::vec2(a, b); }

const FinslerNorm& randers05() {
    static const FinslerNorm norm =
        FinslerNorm::randers(Matrix::Identity(2, 2), vec2(0.5, 0.0));
    return norm;
}

constexpr double kWitnessFxi = 1.3416407864998738;       // 1.5 / sqrt(1.25)
constexpr double kWitnessFxiReverse = 0.4472135954999579;  // 0.5 / sqrt(1.25)
constexpr double kWitnessMarginUnit = 0.3819660112501051;  // 1.5 - sqrt(1.25)
constexpr double kWitnessMarginUnitReverse = 0.6180339887498949;

// ---------------------------------------------------------------------------

std::string ac1_euler_homogeneity() {
    const auto t0 = std::chrono::steady_clock::now();

    struct Entry {
        FinslerNorm norm;
        double tol;
    };
    std::vector<Entry> suite;
    suite.push_back({FinslerNorm::riemannian(test::mat2(2.0, 0.3, 0.3, 1.0)), 1e-9});
    for (const double b : {0.1, 0.3, 0.5, 0.9}) {
        suite.push_back({FinslerNorm::randers(Matrix::Identity(2, 2), vec2(b, 0.0)), 1e-9});
    }
    suite.push_back({dsl::to_norm(dsl::parse("sqrt(y1^2 + y2^2) + 0.5*y1", 2)), 1e-6});
    suite.push_back({dsl::to_norm(dsl::parse("(y1^4 + y2^4 + y1^2*y2^2)^(1/4)", 2)), 1e-6});

    auto rng = test::make_rng(20260808);
    std::uniform_real_distribution<double> lam(0.1, 10.0);
    double worst = 0.0;
    for (const Entry& entry : suite) {
        const FinslerNorm& norm = entry.norm;
        for (int k = 0; k < 1000; ++k) {
            const Vector y = test::random_box(rng, norm.dimension());
            const double l = lam(rng);
            const Jet2 jet = norm.jet(y);
            const double f = jet.value;
            const Matrix g = fundamental_tensor(norm, y).matrix;

            const double e_hom = std::abs(norm.eval(l * y) - l * f) / (l * f);
            const double e_grad = std::abs(y.dot(jet.gradient) - f) / f;
            const double e_gy =
                (g * y - f * jet.gradient).lpNorm<Eigen::Infinity>() /
                std::max(1.0, (f * jet.gradient).lpNorm<Eigen::Infinity>());
            const double e_quad = std::abs(y.dot(g * y) - f * f) / (f * f);

            const double e = std::max({e_hom, e_grad, e_gy, e_quad});
            worst = std::max(worst, e / entry.tol);
            if (e > entry.tol) {
                return fail(norm.name() + " identity error " + std::to_string(e) +
                            " above tolerance " + std::to_string(entry.tol));
            }
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 5.0) return fail("runtime " + std::to_string(secs) + " s >= 5 s");
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "7 norms x 1000 points, worst error %.2e of tolerance, %.2f s", worst, secs);
    return buf;
}

std::string ac2_riemannian_equality() {
    const auto t0 = std::chrono::steady_clock::now();
    auto rng = test::make_rng(31415);
    double worst = 0.0;
    for (int m = 0; m < 20; ++m) {
        const Eigen::Index n = 2 + (m % 2);
        const FinslerNorm norm = FinslerNorm::riemannian(test::random_spd(rng, n));
        for (int k = 0; k < 100; ++k) {
            const Vector y = test::random_box(rng, n);
            const Vector xi = test::random_box(rng, n);
            const double diff = std::abs(relative_length(norm, xi, y) - norm.eval(xi));
            worst = std::max(worst, diff);
            if (diff > 1e-10) {
                return fail("deviation " + std::to_string(diff) + " above 1e-10");
            }
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 2.0) return fail("runtime " + std::to_string(secs) + " s >= 2 s");
    char buf[120];
    std::snprintf(buf, sizeof(buf), "20 metrics x 100 pairs, worst |diff| %.2e, %.2f s",
                  worst, secs);
    return buf;
}

std::string ac3_matsumoto_witness() {
    const CertifyOutcome out = certify(randers05(), vec2(0.0, 1.0), vec2(1.0, 0.0));
    if (!out.violation()) return fail("no certificate produced");
    if (out.certificate->direction != ViolationDirection::matsumoto) {
        return fail("wrong direction");
    }
    const double err = std::abs(out.F_xi - kWitnessFxi);
    if (err > 1e-5) return fail("F_xi error " + std::to_string(err) + " above 1e-5");
    char buf[120];
    std::snprintf(buf, sizeof(buf), "F(xi) = %.9f vs %.9f, |err| %.1e", out.F_xi,
                  kWitnessFxi, err);
    return buf;
}

std::string ac4_reverse_witness() {
    const CertifyOutcome out = certify(randers05(), vec2(0.0, 1.0), vec2(-1.0, 0.0));
    if (!out.violation()) return fail("no certificate produced");
    if (out.certificate->direction != ViolationDirection::reverse) {
        return fail("wrong direction");
    }
    const double err = std::abs(out.F_xi - kWitnessFxiReverse);
    if (err > 1e-5) return fail("F_xi error " + std::to_string(err) + " above 1e-5");
    char buf[120];
    std::snprintf(buf, sizeof(buf), "F(xi) = %.9f vs %.9f, |err| %.1e", out.F_xi,
                  kWitnessFxiReverse, err);
    return buf;
}

std::string ac5_scan_witnesses() {
    const auto t0 = std::chrono::steady_clock::now();
    const ScanReport report = scan(randers05(), 360, 16, {}, 0);
    const double secs = seconds_since(t0);

    if (!report.matsumoto.best || !report.reverse.best) {
        return fail("scan missed a direction");
    }
    if (report.matsumoto.best_margin < 0.99 * kWitnessMarginUnit) {
        return fail("matsumoto margin " + std::to_string(report.matsumoto.best_margin) +
                    " below 99% of witness " + std::to_string(kWitnessMarginUnit));
    }
    if (report.reverse.best_margin < 0.99 * kWitnessMarginUnitReverse) {
        return fail("reverse margin " + std::to_string(report.reverse.best_margin) +
                    " below 99% of witness " + std::to_string(kWitnessMarginUnitReverse));
    }
    if (secs >= 30.0) return fail("runtime " + std::to_string(secs) + " s >= 30 s");
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "margins %.6f / %.6f vs witnesses %.6f / %.6f, %zu defects, %.2f s",
                  report.matsumoto.best_margin, report.reverse.best_margin,
                  kWitnessMarginUnit, kWitnessMarginUnitReverse, report.defects.size(), secs);
    return buf;
}

std::string ac6_osculation() {
    const std::vector<double> steps{0.1, 0.05, 0.025, 0.0125};
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) {
        const double th = 2.0 * std::numbers::pi * k / 8;
        const Vector y =
            indicatrix_point(randers05(), vec2(std::cos(th), std::sin(th)));
        const std::vector<double> d = osculation_deltas(randers05(), y, steps);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (!std::isfinite(d[i]) || !std::isfinite(d[i + 1])) {
                return fail("defective osculation step at base angle " + std::to_string(th));
            }
            const double ratio = d[i + 1] / d[i];
            worst = std::max(worst, ratio);
            if (ratio > 0.3) {
                return fail("ratio " + std::to_string(ratio) + " above 0.3 at base angle " +
                            std::to_string(th));
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "8 base points x 3 halvings, worst ratio %.4f <= 0.3",
                  worst);
    return buf;
}

std::string ac7_convexity_audit() {
    const AuditResult quartic =
        audit_convexity(FinslerNorm::mth_root(4, vec2(1.0, 1.0)), 360);
    if (quartic.strongly_convex()) return fail("quartic-root norm passed the audit");
    if (!(quartic.spectral_floor <= 1e-6)) {
        return fail("quartic floor " + std::to_string(quartic.spectral_floor) +
                    " not <= 1e-6");
    }
    bool near_axis = false;
    for (const std::size_t i : quartic.failing) {
        if (i % 90 == 0) near_axis = true;
    }
    if (!near_axis) return fail("no axis direction flagged");

    const AuditResult randers = audit_convexity(randers05(), 360);
    if (!randers.strongly_convex()) return fail("randers b=0.5 failed the audit");
    if (!(randers.spectral_floor > 0.01)) {
        return fail("randers floor " + std::to_string(randers.spectral_floor) +
                    " not > 0.01");
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "quartic floor %.2e flagged at axes; randers floor %.4f > 0.01",
                  quartic.spectral_floor, randers.spectral_floor);
    return buf;
}

std::string ac8_fd_soundness() {
    // every certificate the suite can produce, re-verified through the
    // finite-difference tensor path
    std::vector<Certificate> certs;
    for (const Vector& xi : {vec2(1.0, 0.0), vec2(-1.0, 0.0), vec2(0.7, -0.9)}) {
        const CertifyOutcome out = certify(randers05(), vec2(0.0, 1.0), xi);
        if (out.violation()) certs.push_back(*out.certificate);
    }
    for (const Certificate& c : scan(randers05(), 90, 8, {}, 0).certificates()) {
        certs.push_back(c);
    }
    const FinslerNorm viaDsl = dsl::to_norm(dsl::parse("sqrt(y1^2 + y2^2) + 0.3*y1", 2));
    for (const Certificate& c : scan(viaDsl, 90, 8, {}, 0).certificates()) {
        certs.push_back(c);
    }
    if (certs.size() < 6) return fail("expected at least 6 certificates to cross-check");

    double worst_retention = 1e9;
    for (const Certificate& c : certs) {
        const FdCheck check = verify_certificate_fd(c);
        if (!check.direction_preserved) return fail("direction flipped under fd tensor");
        const double retention = check.margin / c.margin;
        worst_retention = std::min(worst_retention, retention);
        if (retention < 0.9) {
            return fail("margin retention " + std::to_string(retention) + " below 0.9");
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf),
                  "%zu certificates, 0 false, worst margin retention %.6f >= 0.9",
                  certs.size(), worst_retention);
    return buf;
}

std::string ac9_determinism() {
    const fs::path dir = fs::current_path() / "acceptance_work";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const fs::path normfile = dir / "randers.txt";
    std::ofstream(normfile) << randers05().definition();

    auto shell = [&](const std::string& args) {
        const std::string cmd = std::string(FINSLER_CLI_PATH) + " " + args + " > " +
                                (dir / "stdout.txt").string() + " 2>&1";
        const int status = std::system(cmd.c_str());
        return (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    const std::string scan_args =
        " --resolution 180 --restarts 8 --seed 0 --out ";
    if (shell("scan " + normfile.string() + scan_args + (dir / "a.json").string()) != 0) {
        return fail("first scan run failed");
    }
    if (shell("scan " + normfile.string() + scan_args + (dir / "b.json").string()) != 0) {
        return fail("second scan run failed");
    }
    const std::string ja = slurp(dir / "a.json");
    if (ja.empty() || ja != slurp(dir / "b.json")) {
        return fail("certificates.json differs between identical runs");
    }

    const std::string plot_args = " --y 0,1 --xi 1,0 --out ";
    if (shell("plot " + normfile.string() + plot_args + (dir / "a.svg").string()) != 0) {
        return fail("first plot run failed");
    }
    if (shell("plot " + normfile.string() + plot_args + (dir / "b.svg").string()) != 0) {
        return fail("second plot run failed");
    }
    const std::string sa = slurp(dir / "a.svg");
    if (sa.empty() || sa != slurp(dir / "b.svg")) {
        return fail("svg differs between identical runs");
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "scan json (%zu bytes) and svg (%zu bytes) byte-identical",
                  ja.size(), sa.size());
    return buf;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n================\n");
    run_criterion("AC1", "Euler/homogeneity identities across the norm suite",
                  ac1_euler_homogeneity);
    run_criterion("AC2", "riemannian equality |xi|_y = F(xi)", ac2_riemannian_equality);
    run_criterion("AC3", "matsumoto violation at the randers witness", ac3_matsumoto_witness);
    run_criterion("AC4", "reverse violation at the randers witness", ac4_reverse_witness);
    run_criterion("AC5", "scan at resolution 360 recovers both witnesses", ac5_scan_witnesses);
    run_criterion("AC6", "osculating ellipsoids have second-order contact", ac6_osculation);
    run_criterion("AC7", "strong-convexity audit separates the families", ac7_convexity_audit);
    run_criterion("AC8", "finite-difference cross-check of every certificate",
                  ac8_fd_soundness);
    run_criterion("AC9", "byte-identical scan json and svg for a fixed seed", ac9_determinism);

    if (g_failures == 0) {
        std::printf("all 9 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
