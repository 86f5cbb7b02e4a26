#ifndef GAMMA_SHARP_PROOF_CERTIFICATES_HPP
#define GAMMA_SHARP_PROOF_CERTIFICATES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "gamma_sharp/policy.hpp"
#include "gamma_sharp/report.hpp"

namespace gsharp {

/// Quartic with all-negative coefficients in the (x-1) basis; F1(x) < 0 for
/// x >= 1.
double poly_F1(double x);

/// Octic with all-positive coefficients in the (x-2) basis; F2(x) > 0 for
/// x >= 2.
double poly_F2(double x);

/// Shifted-basis coefficients, exposed for the structural sign checks.
const std::array<std::int64_t, 5>& poly_F1_coeffs();
const std::array<std::int64_t, 9>& poly_F2_coeffs();

/// Targets for monotonicity_scan.
enum class CertTarget {
    F1_SIGN,
    F2_SIGN,
    F1_DECREASING,
    F2TILDE_DECREASING,
    F3_DECREASING,
    F3_CONVEX,
};

/// Default scan grid: [lo, 100] step 0.1 plus logarithmic points up to
/// log_max.
std::vector<double> default_grid(double lo, double hi = 100.0, double step = 0.1,
                                 double log_max = 1e6);

/// Checks the four borrowed digamma/trigamma inequalities on the grid.
/// The trigamma pair is checked for x >= 1 only, the digamma pair for all
/// x > 0.
ScanReport chen_certificates(const std::vector<double>& grid, const AccuracyPolicy& policy = {});

/// Pointwise sign checks and first/second-difference monotonicity scans for
/// the lemma machinery.  Differences smaller than the combined error bounds
/// are counted inconclusive, not failed.
ScanReport monotonicity_scan(CertTarget target, const std::vector<double>& grid,
                             const AccuracyPolicy& policy = {});

}  // namespace gsharp

#endif
