#include "gamma_sharp/sequences.hpp"

#include <cmath>
#include <string>

#include "gamma_sharp/special_fn.hpp"

namespace gsharp {
namespace {

void check_args(double a, std::int64_t n, const char* fn) {
    if (!(a > 0.0))
        throw std::domain_error(std::string(fn) + ": a must be > 0");
    if (n < 1)
        throw std::domain_error(std::string(fn) + ": n must be >= 1");
}

void check_guard(std::int64_t n, const char* fn) {
    if (n > kSummationGuard)
        throw ResourceError(std::string(fn) + ": n exceeds summation guard 1e7");
}

// Neumaier-compensated sum of 1/(a+k), k = 0..n-1.
double harmonic_like(double a, std::int64_t n) {
    double sum = 0.0;
    double comp = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        const double term = 1.0 / (a + static_cast<double>(k));
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

}  // namespace

GeneralizedGamma gamma_a(double a, const AccuracyPolicy& policy) {
    if (!(a > 0.0)) throw std::domain_error("gamma_a: a must be > 0");
    const EvalResult r = ln_minus_psi(a, policy);
    return {a, r.value, r.abs_error_bound};
}

double x_n_closed(double a, std::int64_t n, const AccuracyPolicy& policy) {
    check_args(a, n, "x_n_closed");
    const double m = static_cast<double>(n) + a;
    return psi(m, policy).value - psi(a, policy).value - std::log(m / a);
}

double y_n_closed(double a, std::int64_t n, const AccuracyPolicy& policy) {
    check_args(a, n, "y_n_closed");
    const double m = static_cast<double>(n) + a;
    return psi(m, policy).value - psi(a, policy).value - std::log((m - 1.0) / a);
}

double x_n_direct(double a, std::int64_t n, const AccuracyPolicy& policy) {
    policy.validate();
    check_args(a, n, "x_n_direct");
    check_guard(n, "x_n_direct");
    const double m = static_cast<double>(n) + a;
    return harmonic_like(a, n) - std::log(m / a);
}

double y_n_direct(double a, std::int64_t n, const AccuracyPolicy& policy) {
    policy.validate();
    check_args(a, n, "y_n_direct");
    check_guard(n, "y_n_direct");
    const double m = static_cast<double>(n) + a;
    return harmonic_like(a, n) - std::log((m - 1.0) / a);
}

double residual_x(double a, std::int64_t n, const AccuracyPolicy& policy) {
    check_args(a, n, "residual_x");
    return ln_minus_psi(static_cast<double>(n) + a, policy).value;
}

double residual_y(double a, std::int64_t n, const AccuracyPolicy& policy) {
    check_args(a, n, "residual_y");
    return psi_shift1_minus_ln(static_cast<double>(n) + a - 1.0, policy).value;
}

std::vector<SeqPoint> table(double a, std::int64_t n_max, const AccuracyPolicy& policy) {
    check_args(a, n_max, "table");
    check_guard(n_max, "table");
    std::vector<SeqPoint> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    const double psi_a = psi(a, policy).value;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const double m = static_cast<double>(n) + a;
        const double psi_m = psi(m, policy).value;
        SeqPoint p;
        p.a = a;
        p.n = n;
        p.x_n = psi_m - psi_a - std::log(m / a);
        p.y_n = psi_m - psi_a - std::log((m - 1.0) / a);
        p.res_x = residual_x(a, n, policy);
        p.res_y = residual_y(a, n, policy);
        rows.push_back(p);
    }
    return rows;
}

}  // namespace gsharp
