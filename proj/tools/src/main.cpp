// finsler: indicatrix geometry of Finsler norms from the command line.
//
//   finsler audit   norm.txt --resolution 360
//   finsler scan    norm.txt --out certificates.json
//   finsler certify norm.txt --y 0,1 --xi 1,0
//   finsler certify --recheck certificates.json
//   finsler plot    norm.txt --y 0,1 --out figure.svg

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "finsler/dsl.hpp"

namespace {

void add_tolerance_flags(CLI::App* cmd, finsler::ToleranceConfig& tol) {
    cmd->add_option("--pd-tol", tol.pd_tolerance,
                    "positive-definiteness gate, relative to max |g|")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--certify-tol", tol.certify_tol, "violation margin threshold")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--fd-step", tol.fd_step, "finite-difference base step")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--grad-tol", tol.optimizer_grad_tol, "optimizer gradient tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", tol.max_iters, "optimizer iteration cap")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace finsler::cli;

    CLI::App app{"indicatrix geometry of Finsler norms: fundamental tensor audits, "
                 "osculating-ellipsoid scans and inequality certificates"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* audit = app.add_subcommand("audit", "strong-convexity audit over a direction grid");
    audit->add_option("norm-file", opt.norm_file, "norm definition file")->required();
    audit->add_option("--resolution", opt.resolution, "grid resolution (default 360)")
        ->check(CLI::Range(8, 1 << 20));
    std::optional<std::string> audit_csv;
    audit->add_option("--csv", audit_csv, "also export the sampled indicatrix as CSV");
    add_tolerance_flags(audit, opt.tol);

    auto* scan = app.add_subcommand("scan", "sweep the indicatrix for inequality violations");
    scan->add_option("norm-file", opt.norm_file, "norm definition file")->required();
    scan->add_option("--resolution", opt.resolution, "grid resolution (default 360)")
        ->check(CLI::Range(8, 1 << 20));
    scan->add_option("--restarts", opt.restarts, "optimizer multistarts (default 16)")
        ->check(CLI::Range(1, 1 << 16));
    scan->add_option("--seed", opt.seed, "multistart seed (default 0)");
    std::string scan_out = "certificates.json";
    scan->add_option("--out", scan_out, "certificates JSON path (default certificates.json)");
    add_tolerance_flags(scan, opt.tol);

    auto* certify = app.add_subcommand("certify", "check one (y, xi) pair for a violation");
    certify->add_option("norm-file", opt.norm_file, "norm definition file");
    std::string y_text, xi_text;
    certify->add_option("--y", y_text, "base direction, comma-separated reals");
    certify->add_option("--xi", xi_text, "probe direction, comma-separated reals");
    std::optional<std::string> certify_out;
    certify->add_option("--out", certify_out, "write the certificate JSON here");
    std::optional<std::string> recheck_file;
    certify->add_option("--recheck", recheck_file,
                        "re-verify certificates from a JSON file instead");
    add_tolerance_flags(certify, opt.tol);

    auto* plot = app.add_subcommand("plot", "render indicatrix and osculating ellipse as SVG");
    plot->add_option("norm-file", opt.norm_file, "norm definition file")->required();
    std::string plot_y;
    plot->add_option("--y", plot_y, "base direction, comma-separated reals")->required();
    std::optional<std::string> plot_xi;
    plot->add_option("--xi", plot_xi, "witness direction to draw");
    std::string plot_out = "figure.svg";
    plot->add_option("--out", plot_out, "SVG path (default figure.svg)");
    int canvas_px = 640;
    plot->add_option("--canvas", canvas_px, "canvas size in px (default 640)")
        ->check(CLI::Range(64, 8192));
    int samples = 720;
    plot->add_option("--samples", samples, "polyline samples (default 720, min 720)")
        ->check(CLI::Range(8, 1 << 20));
    add_tolerance_flags(plot, opt.tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        opt.tol.validate();
        if (audit->parsed()) return cmd_audit(opt, audit_csv);
        if (scan->parsed()) return cmd_scan(opt, scan_out);
        if (certify->parsed()) {
            if (recheck_file) return cmd_recheck(opt, *recheck_file);
            if (opt.norm_file.empty() || y_text.empty() || xi_text.empty()) {
                std::cerr << "certify needs a norm file plus --y and --xi (or --recheck)\n";
                return kExitInput;
            }
            return cmd_certify(opt, y_text, xi_text, certify_out);
        }
        if (plot->parsed()) return cmd_plot(opt, plot_y, plot_xi, plot_out, canvas_px, samples);
        return kExitInput;
    } catch (const finsler::ConvexityError& e) {
        std::cerr << "convexity error: " << e.what() << "\n";
        return kExitConvexity;
    } catch (const finsler::NumericalError& e) {
        std::cerr << "numerical-trust error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const finsler::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
