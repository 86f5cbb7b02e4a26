#include "gamma_sharp/proof_certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gamma_sharp/sharp_bounds.hpp"
#include "gamma_sharp/special_fn.hpp"

namespace gsharp {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

constexpr std::array<std::int64_t, 5> kF1Coeffs = {-207, -3840, -6580, -3640, -700};
constexpr std::array<std::int64_t, 9> kF2Coeffs = {3217636, 17887632, 39443124, 47009928,
                                                  33797841, 15180480, 4189500,  652680,
                                                  44100};

template <std::size_t N>
double shifted_horner(const std::array<std::int64_t, N>& coeffs, double t) {
    double acc = static_cast<double>(coeffs[N - 1]);
    for (std::size_t i = N - 1; i-- > 0;)
        acc = acc * t + static_cast<double>(coeffs[i]);
    return acc;
}

double fn_noise(double x) { return 8.0 * kEps * (std::abs(x) + 1.0); }

std::string where_x(double x) { return "x=" + std::to_string(x); }

void check_grid_min(const std::vector<double>& grid, double lo, bool open, const char* what) {
    if (grid.empty()) throw std::domain_error(std::string(what) + ": empty grid");
    const double mn = *std::min_element(grid.begin(), grid.end());
    if (open ? !(mn > lo) : !(mn >= lo))
        throw std::domain_error(std::string(what) + ": grid leaves the target domain");
}

}  // namespace

double poly_F1(double x) { return shifted_horner(kF1Coeffs, x - 1.0); }

double poly_F2(double x) { return shifted_horner(kF2Coeffs, x - 2.0); }

const std::array<std::int64_t, 5>& poly_F1_coeffs() { return kF1Coeffs; }

const std::array<std::int64_t, 9>& poly_F2_coeffs() { return kF2Coeffs; }

std::vector<double> default_grid(double lo, double hi, double step, double log_max) {
    std::vector<double> g;
    for (double x = lo; x <= hi + 0.5 * step; x += step) g.push_back(std::min(x, hi));
    for (double x = hi * 1.3; x < log_max; x *= 1.3) g.push_back(x);
    if (log_max > hi) g.push_back(log_max);
    return g;
}

ScanReport chen_certificates(const std::vector<double>& grid, const AccuracyPolicy& policy) {
    check_grid_min(grid, 0.0, true, "chen_certificates");
    ScanReport rep;
    rep.suite = "chen_certificates";
    rep.domain = std::to_string(grid.size()) + " grid points, x > 0";

    for (double x : grid) {
        const double inv = 1.0 / x;
        const double i2 = inv * inv, i3 = i2 * inv, i4 = i2 * i2, i5 = i4 * inv, i6 = i3 * i3,
                     i7 = i6 * inv;
        // both sides carry rounding of order eps * (1/x + 1/x^2); margins
        // below that are inconclusive, not violations
        const double tol = 64.0 * kEps * (inv + i2);
        auto check = [&](const char* name, double lhs, double rhs) {
            if (lhs - rhs > tol) {
                rep.record(where_x(x), name, lhs, rhs);
            } else {
                ++rep.points_checked;
                if (std::abs(lhs - rhs) <= tol)
                    ++rep.inconclusive;
                else if (lhs - rhs > rep.max_violation)
                    rep.max_violation = lhs - rhs;
            }
        };
        if (x >= 1.0) {
            const double tg = trigamma(x, policy).value;
            check("trigamma_upper", tg - inv, 0.5 * i2 + i3 / 6.0 - i5 / 30.0 + i7 / 42.0);
            const double lmp = ln_minus_psi(x, policy).value;
            check("ln_minus_psi_lower", 0.5 * inv + i2 / 12.0 - i4 / 120.0, lmp);
        }
        const double tg = trigamma(x, policy).value;
        check("trigamma_shift_upper", inv + i2 - tg, 0.5 * i2 - i3 / 6.0 + i5 / 30.0);
        const double psm = psi_shift1_minus_ln(x, policy).value;
        check("psi_shift_lower", 0.5 * inv - i2 / 12.0 + i4 / 120.0 - i6 / 252.0, psm);
    }
    return rep;
}

ScanReport monotonicity_scan(CertTarget target, const std::vector<double>& grid,
                             const AccuracyPolicy& policy) {
    ScanReport rep;
    rep.domain = std::to_string(grid.size()) + " grid points";

    auto scan_sign = [&](const char* name, auto&& f, bool negative) {
        rep.suite = name;
        for (double x : grid) {
            const double v = f(x);
            rep.record(where_x(x), negative ? "value < 0" : "value > 0", negative ? v : -v, 0.0);
        }
    };
    auto scan_decreasing = [&](const char* name, auto&& f) {
        rep.suite = name;
        std::vector<double> sorted(grid);
        std::sort(sorted.begin(), sorted.end());
        double prev = f(sorted.front());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            const double cur = f(sorted[i]);
            const double diff = cur - prev;
            const double tol = fn_noise(sorted[i]) + fn_noise(sorted[i - 1]);
            if (std::abs(diff) <= tol) {
                ++rep.inconclusive;
                ++rep.points_checked;
            } else {
                rep.record(where_x(sorted[i]), "first_difference < 0", diff, 0.0);
            }
            prev = cur;
        }
    };

    switch (target) {
        case CertTarget::F1_SIGN:
            check_grid_min(grid, 1.0, false, "monotonicity_scan(F1_SIGN)");
            scan_sign("F1_SIGN", [](double x) { return poly_F1(x); }, true);
            break;
        case CertTarget::F2_SIGN:
            check_grid_min(grid, 2.0, false, "monotonicity_scan(F2_SIGN)");
            scan_sign("F2_SIGN", [](double x) { return poly_F2(x); }, false);
            break;
        case CertTarget::F1_DECREASING:
            check_grid_min(grid, 1.0, true, "monotonicity_scan(F1_DECREASING)");
            scan_decreasing("f1_decreasing", [&](double x) { return f1(x, policy); });
            break;
        case CertTarget::F2TILDE_DECREASING:
            check_grid_min(grid, 0.0, true, "monotonicity_scan(F2TILDE_DECREASING)");
            scan_decreasing("f2tilde_decreasing", [&](double x) { return f2tilde(x, policy); });
            break;
        case CertTarget::F3_DECREASING:
            check_grid_min(grid, 0.0, true, "monotonicity_scan(F3_DECREASING)");
            scan_decreasing("f3_decreasing", [&](double x) { return f3(x, policy); });
            break;
        case CertTarget::F3_CONVEX: {
            check_grid_min(grid, 0.0, true, "monotonicity_scan(F3_CONVEX)");
            rep.suite = "f3_convex";
            std::vector<double> sorted(grid);
            std::sort(sorted.begin(), sorted.end());
            double prev_slope = 0.0;
            bool have_prev = false;
            for (std::size_t i = 1; i < sorted.size(); ++i) {
                const double dx = sorted[i] - sorted[i - 1];
                if (dx <= 0.0) continue;
                const double slope = (f3(sorted[i], policy) - f3(sorted[i - 1], policy)) / dx;
                if (have_prev) {
                    const double diff = prev_slope - slope;  // slopes must increase
                    const double tol = 3.0 * fn_noise(sorted[i]) / dx;
                    if (std::abs(diff) <= tol) {
                        ++rep.inconclusive;
                        ++rep.points_checked;
                    } else {
                        rep.record(where_x(sorted[i]), "slope increasing", diff, 0.0);
                    }
                }
                prev_slope = slope;
                have_prev = true;
            }
            break;
        }
    }
    return rep;
}

}  // namespace gsharp
