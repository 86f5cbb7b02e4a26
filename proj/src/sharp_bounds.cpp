#include "gamma_sharp/sharp_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gamma_sharp/sequences.hpp"
#include "gamma_sharp/special_fn.hpp"

namespace gsharp {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_a(double a, const char* fn) {
    if (!(a > 0.0)) throw std::domain_error(std::string(fn) + ": a must be > 0");
}

// Crude rounding-noise estimate for f1/f2tilde/f3, which all subtract two
// quantities of magnitude ~x.
double fn_noise(double x) { return 8.0 * kEps * (std::abs(x) + 1.0); }

double classical_gamma(const AccuracyPolicy& policy) {
    return ln_minus_psi(1.0, policy).value;
}

void require_a1(double a, Family family) {
    if (a != 1.0)
        throw std::domain_error("bound_residual: family " + to_string(family) +
                                " requires a = 1");
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::THM13_X: return "THM13_X";
        case Family::THM13_Y: return "THM13_Y";
        case Family::THM14_X: return "THM14_X";
        case Family::THM14_Y: return "THM14_Y";
        case Family::SINT: return "SINT";
        case Family::BM11: return "BM11";
        case Family::BM12: return "BM12";
        case Family::ALZER: return "ALZER";
        case Family::TOTH: return "TOTH";
        case Family::CHEN: return "CHEN";
        case Family::QIU: return "QIU";
    }
    return "?";
}

std::string to_string(Side s) { return s == Side::LO ? "LO" : "HI"; }

std::string to_string(EncloseMethod m) {
    switch (m) {
        case EncloseMethod::THM13_X: return "THM13_X";
        case EncloseMethod::THM13_Y: return "THM13_Y";
        case EncloseMethod::THM14_X: return "THM14_X";
        case EncloseMethod::THM14_Y: return "THM14_Y";
        case EncloseMethod::INTERSECT: return "INTERSECT";
    }
    return "?";
}

double f1(double x, const AccuracyPolicy& policy) {
    if (!(x > 1.0)) throw std::domain_error("f1: x must be > 1");
    return 1.0 / ln_minus_psi(x, policy).value - 2.0 * x;
}

double f2tilde(double x, const AccuracyPolicy& policy) {
    if (!(x > 0.0)) throw std::domain_error("f2tilde: x must be > 0");
    return 0.5 / psi_shift1_minus_ln(x, policy).value - x;
}

double f3(double x, const AccuracyPolicy& policy) {
    if (!(x > 0.0)) throw std::domain_error("f3: x must be > 0");
    return -x * x * ln_minus_psi(x, policy).value + 0.5 * x;
}

BestConstants best_constants(double a, const AccuracyPolicy& policy) {
    check_a(a, "best_constants");
    BestConstants c;
    c.a = a;
    c.alpha1 = 2.0 * (1.0 + a) - 1.0 / ln_minus_psi(1.0 + a, policy).value;
    c.beta1 = 1.0 / 3.0;

    const double v[3] = {f2tilde(a, policy), f2tilde(1.0 + a, policy), f2tilde(2.0 + a, policy)};
    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (v[i] > v[best]) best = i;
    // smallest index wins ties within combined error bounds
    for (int i = 0; i < best; ++i) {
        if (v[best] - v[i] <= fn_noise(a + best) + fn_noise(a + i)) {
            c.d_tie = true;
            best = i;
            break;
        }
    }
    c.d = v[best];
    c.argmax_n = best + 1;
    c.alpha2 = 2.0 * (1.0 - c.d);
    c.beta2 = 5.0 / 3.0;

    c.alpha3 = -f3(1.0 + a, policy);
    c.beta3 = 1.0 / 12.0;
    c.alpha4 = -1.0 / 12.0;
    c.beta4 = f3(a, policy);
    return c;
}

double bound_residual(double a, std::int64_t n, Family family, Side side,
                      const AccuracyPolicy& policy) {
    check_a(a, "bound_residual");
    if (n < 1) throw std::domain_error("bound_residual: n must be >= 1");
    const double nn = static_cast<double>(n);
    const double m = nn + a;

    switch (family) {
        case Family::THM13_X: {
            const double c = side == Side::LO ? best_constants(a, policy).alpha1 : 1.0 / 3.0;
            return 1.0 / (2.0 * m - c);
        }
        case Family::THM13_Y: {
            const double c = side == Side::LO ? best_constants(a, policy).alpha2 : 5.0 / 3.0;
            return 1.0 / (2.0 * m - c);
        }
        case Family::THM14_X: {
            const double c = side == Side::LO ? best_constants(a, policy).alpha3 : 1.0 / 12.0;
            return 0.5 / m + c / (m * m);
        }
        case Family::THM14_Y: {
            const double w = m - 1.0;
            const double c = side == Side::LO ? -1.0 / 12.0 : best_constants(a, policy).beta4;
            return 0.5 / w + c / (w * w);
        }
        case Family::SINT:
            return side == Side::LO ? 0.5 / m : 0.5 / (m - 1.0);
        case Family::BM11:
            if (n < 2) throw std::domain_error("bound_residual: BM11 requires n >= 2");
            return side == Side::LO ? 1.0 / (2.0 * m - 0.25) : 1.0 / (2.0 * m - 1.0 / 3.0);
        case Family::BM12:
            // lower bounds only; side picks the residual
            if (side == Side::LO) {
                if (a < 13.0 / 30.0)
                    throw std::domain_error("bound_residual: BM12 x-side requires a >= 13/30");
                return 1.0 / (2.0 * m - 1.0 / 3.0 + 1.0 / (18.0 * nn));
            }
            if (a < 17.0 / 30.0)
                throw std::domain_error("bound_residual: BM12 y-side requires a >= 17/30");
            return 1.0 / (2.0 * m - 5.0 / 3.0 + 1.0 / (18.0 * nn));
        case Family::ALZER:
            require_a1(a, family);
            return side == Side::LO ? 1.0 / (2.0 * nn + 1.0) : 0.5 / nn;
        case Family::TOTH:
            require_a1(a, family);
            return side == Side::LO ? 1.0 / (2.0 * nn + 0.4) : 1.0 / (2.0 * nn + 1.0 / 3.0);
        case Family::CHEN: {
            require_a1(a, family);
            if (side == Side::HI) return 1.0 / (2.0 * nn + 1.0 / 3.0);
            const double g = classical_gamma(policy);
            return 1.0 / (2.0 * nn + (2.0 * g - 1.0) / (1.0 - g));
        }
        case Family::QIU: {
            require_a1(a, family);
            const double g = classical_gamma(policy);
            const double c = side == Side::LO ? 1.0 / 12.0 : g - 0.5;
            return 0.5 / nn - c / (nn * nn);
        }
    }
    throw std::domain_error("bound_residual: unknown family");
}

Enclosure enclose(double a, std::int64_t n, EncloseMethod method, const AccuracyPolicy& policy) {
    check_a(a, "enclose");
    if (n < 1) throw std::domain_error("enclose: n must be >= 1");

    if (method == EncloseMethod::INTERSECT) {
        Enclosure e;
        e.a = a;
        e.n = n;
        e.method = method;
        e.lo = -std::numeric_limits<double>::infinity();
        e.hi = std::numeric_limits<double>::infinity();
        for (auto m : {EncloseMethod::THM13_X, EncloseMethod::THM13_Y, EncloseMethod::THM14_X,
                       EncloseMethod::THM14_Y}) {
            const Enclosure part = enclose(a, n, m, policy);
            e.lo = std::max(e.lo, part.lo);
            e.hi = std::min(e.hi, part.hi);
        }
        if (e.lo > e.hi)
            throw std::logic_error("enclose: empty intersection beyond error bounds");
        return e;
    }

    const double m = static_cast<double>(n) + a;
    const EvalResult psi_m = psi(m, policy);
    const EvalResult psi_a = psi(a, policy);
    const double eval_err =
        psi_m.abs_error_bound + psi_a.abs_error_bound + 4.0 * kEps * (std::abs(psi_m.value) + 1.0);

    Enclosure e;
    e.a = a;
    e.n = n;
    e.method = method;

    switch (method) {
        case EncloseMethod::THM13_X: {
            const double xn = psi_m.value - psi_a.value - std::log(m / a);
            e.lo = xn + bound_residual(a, n, Family::THM13_X, Side::LO, policy);
            e.hi = xn + bound_residual(a, n, Family::THM13_X, Side::HI, policy);
            break;
        }
        case EncloseMethod::THM14_X: {
            const double xn = psi_m.value - psi_a.value - std::log(m / a);
            e.lo = xn + bound_residual(a, n, Family::THM14_X, Side::LO, policy);
            e.hi = xn + bound_residual(a, n, Family::THM14_X, Side::HI, policy);
            break;
        }
        case EncloseMethod::THM13_Y: {
            const double yn = psi_m.value - psi_a.value - std::log((m - 1.0) / a);
            e.lo = yn - bound_residual(a, n, Family::THM13_Y, Side::HI, policy);
            e.hi = yn - bound_residual(a, n, Family::THM13_Y, Side::LO, policy);
            break;
        }
        case EncloseMethod::THM14_Y: {
            const double yn = psi_m.value - psi_a.value - std::log((m - 1.0) / a);
            e.lo = yn - bound_residual(a, n, Family::THM14_Y, Side::HI, policy);
            e.hi = yn - bound_residual(a, n, Family::THM14_Y, Side::LO, policy);
            break;
        }
        case EncloseMethod::INTERSECT:
            break;  // handled above
    }
    e.lo -= eval_err;
    e.hi += eval_err;
    return e;
}

std::vector<double> default_a_grid() {
    std::vector<double> as;
    for (int i = 1; i <= 100; ++i) as.push_back(i / 10.0);
    as.push_back(13.0 / 30.0);
    as.push_back(17.0 / 30.0);
    std::sort(as.begin(), as.end());
    return as;
}

std::vector<std::int64_t> default_n_grid(std::int64_t n_max) {
    std::vector<std::int64_t> ns;
    for (std::int64_t n = 1; n <= 100; ++n) ns.push_back(n);
    for (std::int64_t n = 1000; n <= n_max; n *= 10) ns.push_back(n);
    return ns;
}

ScanReport inequality_grid_scan(const std::vector<double>& a_values,
                                const std::vector<std::int64_t>& n_values, double rel_tol,
                                const AccuracyPolicy& policy) {
    if (!(rel_tol > 0.0)) throw std::domain_error("inequality_grid_scan: rel_tol must be > 0");
    ScanReport rep;
    rep.suite = "inequality_grid";
    rep.domain = std::to_string(a_values.size()) + " x " + std::to_string(n_values.size()) +
                 " (a, n) grid";

    for (double a : a_values) {
        const BestConstants c = best_constants(a, policy);
        for (std::int64_t n : n_values) {
            const double m = static_cast<double>(n) + a;
            const double w = m - 1.0;
            const double rx = residual_x(a, n, policy);
            const double ry = residual_y(a, n, policy);
            const std::string at = "a=" + std::to_string(a) + ",n=" + std::to_string(n);

            auto chk = [&](const char* name, double lhs, double rhs) {
                // lhs <= rhs up to rel_tol slack on the bound magnitude
                rep.record(at, name, lhs - rhs, rel_tol * std::abs(rhs));
            };
            chk("thm13x_lo", 1.0 / (2.0 * m - c.alpha1), rx);
            chk("thm13x_hi", rx, 1.0 / (2.0 * m - c.beta1));
            chk("thm13y_lo", 1.0 / (2.0 * m - c.alpha2), ry);
            chk("thm13y_hi", ry, 1.0 / (2.0 * m - c.beta2));
            chk("thm14x_lo", 0.5 / m + c.alpha3 / (m * m), rx);
            chk("thm14x_hi", rx, 0.5 / m + c.beta3 / (m * m));
            chk("thm14y_lo", 0.5 / w + c.alpha4 / (w * w), ry);
            chk("thm14y_hi", ry, 0.5 / w + c.beta4 / (w * w));
        }
    }
    return rep;
}

ScanReport sharpness_scan(double a, Family family, std::int64_t n_max, double eps,
                          const AccuracyPolicy& policy) {
    check_a(a, "sharpness_scan");
    if (n_max < 1000) throw std::domain_error("sharpness_scan: n_max must be >= 1000");
    if (!(eps > 0.0)) throw std::domain_error("sharpness_scan: eps must be > 0");

    ScanReport rep;
    rep.suite = "sharpness/" + to_string(family);
    rep.domain = "a=" + std::to_string(a) + ", n=1.." + std::to_string(n_max);

    const BestConstants c = best_constants(a, policy);

    // (i) equality attainment
    std::int64_t attain_n = 1;
    Side attain_side = Side::LO;
    bool x_side = true;
    double limit = 0.0;
    int sign = +1;  // +1: sequence decreases to limit, -1: increases
    switch (family) {
        case Family::THM13_X:
            limit = -1.0 / 3.0;
            break;
        case Family::THM13_Y:
            attain_n = c.argmax_n;
            limit = 1.0 / 6.0;
            x_side = false;
            break;
        case Family::THM14_X:
            limit = 1.0 / 12.0;
            sign = -1;
            break;
        case Family::THM14_Y:
            attain_side = Side::HI;
            limit = -1.0 / 12.0;
            x_side = false;
            break;
        default:
            throw std::domain_error("sharpness_scan: family has no sharpness claim");
    }

    const double res = x_side ? residual_x(a, attain_n, policy) : residual_y(a, attain_n, policy);
    const double bound = bound_residual(a, attain_n, family, attain_side, policy);
    rep.record("n=" + std::to_string(attain_n), "equality_attainment |residual - bound| <= eps",
               std::abs(res - bound), eps);

    // (ii) monotone approach of the defining sequence to its limit
    auto seq_value = [&](std::int64_t n) {
        const double m = static_cast<double>(n) + a;
        switch (family) {
            case Family::THM13_X: return f1(m, policy);
            case Family::THM13_Y: return f2tilde(m - 1.0, policy);
            case Family::THM14_X: return -f3(m, policy);
            default: return f3(m - 1.0, policy);
        }
    };
    // f2tilde is only claimed decreasing once its argument reaches 2
    std::int64_t n0 = 1;
    if (family == Family::THM13_Y)
        while (static_cast<double>(n0) + a - 1.0 < 2.0) ++n0;

    std::vector<std::int64_t> ns;
    for (std::int64_t n = n0; n <= std::min<std::int64_t>(100, n_max); ++n) ns.push_back(n);
    for (double n = 125.0; n < static_cast<double>(n_max); n *= 1.25)
        ns.push_back(static_cast<std::int64_t>(n));
    ns.push_back(n_max);

    double prev = seq_value(ns.front());
    double prev_m = static_cast<double>(ns.front()) + a;
    for (std::size_t i = 1; i < ns.size(); ++i) {
        const double m = static_cast<double>(ns[i]) + a;
        const double cur = seq_value(ns[i]);
        const double diff = sign * (cur - prev);  // must be < 0
        const double tol = fn_noise(m) + fn_noise(prev_m);
        if (std::abs(diff) <= tol) {
            ++rep.inconclusive;
            ++rep.points_checked;
        } else {
            rep.record("n=" + std::to_string(ns[i]), "monotone_approach", diff, 0.0);
        }
        prev = cur;
        prev_m = m;
    }
    rep.limit_gap = std::abs(seq_value(n_max) - limit);
    rep.record("n=" + std::to_string(n_max), "limit_gap <= eps", rep.limit_gap, eps);
    return rep;
}

}  // namespace gsharp
