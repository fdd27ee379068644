#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "finsler/tolerances.hpp"

namespace finsler::cli {

// Exit codes shared by all subcommands:
//   0  success
//   1  input error (norm file / vector / flag parsing, unsupported input)
//   2  convexity failure (audit failed, degenerate tensor)
//   3  no violation (certify) / recheck mismatch
//   4  numerical-trust failure
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConvexity = 2;
inline constexpr int kExitNoViolation = 3;
inline constexpr int kExitNumerical = 4;

struct CommonOptions {
    std::string norm_file;
    int resolution = 360;
    int restarts = 16;
    std::uint64_t seed = 0;
    ToleranceConfig tol;
};

int cmd_audit(const CommonOptions& opt, const std::optional<std::string>& csv_out);
int cmd_scan(const CommonOptions& opt, const std::string& certificates_out);
int cmd_certify(const CommonOptions& opt, const std::string& y_text,
                const std::string& xi_text, const std::optional<std::string>& json_out);
int cmd_recheck(const CommonOptions& opt, const std::string& certificates_file);
int cmd_plot(const CommonOptions& opt, const std::string& y_text,
             const std::optional<std::string>& xi_text, const std::string& svg_out,
             int canvas_px, int samples);

}  // namespace finsler::cli
