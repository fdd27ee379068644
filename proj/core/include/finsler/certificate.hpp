#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finsler/tensor.hpp"

namespace finsler {

/// Which side of |xi|_y >= F(xi) is violated. `matsumoto` means the
/// conjectured inequality itself fails (F(xi) > |xi|_y); `reverse` means
/// the opposite comparison fails (F(xi) < |xi|_y).
enum class ViolationDirection { matsumoto, reverse };

std::string_view to_string(ViolationDirection d);
ViolationDirection direction_from_string(std::string_view s);

/// A verified witness (norm, y, xi) of one inequality direction, with the
/// margin |F_xi - rel_len| at the stored scaling of xi and the tolerance
/// snapshot it was produced under. Recomputing F_xi and rel_len from the
/// stored fields reproduces them to 1e-9.
struct Certificate {
    std::string norm_definition;  ///< re-parseable via parse_norm_definition
    Vector y;                     ///< base point, on the indicatrix
    Vector xi;
    double F_xi = 0.0;
    double rel_len = 0.0;
    ViolationDirection direction = ViolationDirection::matsumoto;
    double margin = 0.0;
    ToleranceConfig tolerances;
};

/// Result of certify(): either a certificate or a "no violation" verdict,
/// along with the normalized pair that was actually tested.
struct CertifyOutcome {
    std::optional<Certificate> certificate;
    Vector y;   ///< base point scaled onto the indicatrix
    Vector xi;  ///< direction scaled onto E(y), so rel_len = 1
    double F_xi = 0.0;
    double rel_len = 0.0;
    double margin = 0.0;  ///< |F_xi - rel_len|, also for non-violations

    bool violation() const { return certificate.has_value(); }
};

/// Checks the pair (y, xi) for a violation. y is scaled onto the
/// indicatrix and xi onto E(y) (so the verdict reduces to comparing F(xi)
/// against 1), the tensor behind rel_len is re-derived by finite
/// differences at three increasing steps as a trust check, and margins at
/// or below tol.certify_tol are reported as "no violation".
///
/// Throws ConvexityError when g(y) is degenerate and NumericalError when
/// the finite-difference refinements disagree by more than 1e-5.
CertifyOutcome certify(const FinslerNorm& norm, const Vector& y, const Vector& xi,
                       const ToleranceConfig& tol = {});

/// Re-runs certify on (lambda * y, mu * xi) with an unrelated scale mu and
/// reports whether direction and margin reproduce to 1e-8. Margins are
/// scale-invariant: F and |.|_y are 1-homogeneous in xi and g is
/// 0-homogeneous in y.
bool homogeneity_check_certificate(const Certificate& c, double lambda,
                                   const ToleranceConfig& tol = {});

/// g(y) rebuilt from central finite differences of F^2: the independent
/// code path used to cross-check certificates (no jets involved).
Matrix fd_fundamental_tensor(const FinslerNorm& norm, const Vector& y, double step);

double fd_relative_length(const FinslerNorm& norm, const Vector& xi, const Vector& y,
                          double step);

/// Independent re-verification of a certificate through the
/// finite-difference tensor path.
struct FdCheck {
    bool direction_preserved = false;
    double F_xi = 0.0;
    double rel_len = 0.0;
    double margin = 0.0;
};

FdCheck verify_certificate_fd(const Certificate& c, const ToleranceConfig& tol = {});

// --- JSON schema v1 ("certificate_version": 1) -----------------------------

/// {"certificate_version": 1, "certificates": [...]} with reals printed to
/// 17 significant digits. Byte-deterministic for identical inputs.
std::string certificates_to_json(const std::vector<Certificate>& certs);

/// Same envelope plus a "verdict" field ("violation" / "no violation") and
/// the measured margin; used by the certify command.
std::string certify_outcome_to_json(const CertifyOutcome& outcome);

/// Parses either envelope back into certificates.
std::vector<Certificate> certificates_from_json(std::string_view json_text);

}  // namespace finsler
