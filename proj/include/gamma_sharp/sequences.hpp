#ifndef GAMMA_SHARP_SEQUENCES_HPP
#define GAMMA_SHARP_SEQUENCES_HPP

#include <cstdint>
#include <vector>

#include "gamma_sharp/policy.hpp"

namespace gsharp {

/// One row of the convergence table for a fixed parameter a.
struct SeqPoint {
    double a = 0.0;
    std::int64_t n = 0;
    double x_n = 0.0;
    double y_n = 0.0;
    double res_x = 0.0;  // gamma(a) - x_n
    double res_y = 0.0;  // y_n - gamma(a)
};

struct GeneralizedGamma {
    double a = 0.0;
    double value = 0.0;
    double abs_error_bound = 0.0;
};

/// Largest n accepted by the direct-summation paths.
constexpr std::int64_t kSummationGuard = 10'000'000;

/// gamma(a) = ln(a) - psi(a); gamma(1) is the classical Euler-Mascheroni
/// constant.
GeneralizedGamma gamma_a(double a, const AccuracyPolicy& policy = {});

/// x_n = psi(n+a) - psi(a) - ln((n+a)/a).
double x_n_closed(double a, std::int64_t n, const AccuracyPolicy& policy = {});

/// y_n = psi(n+a) - psi(a) - ln((n+a-1)/a).
double y_n_closed(double a, std::int64_t n, const AccuracyPolicy& policy = {});

/// Direct compensated summation of sum_{k=0}^{n-1} 1/(a+k) minus the log
/// term; serves as the independent oracle for the closed forms.
double x_n_direct(double a, std::int64_t n, const AccuracyPolicy& policy = {});
double y_n_direct(double a, std::int64_t n, const AccuracyPolicy& policy = {});

/// gamma(a) - x_n = ln(n+a) - psi(n+a), strictly positive.
double residual_x(double a, std::int64_t n, const AccuracyPolicy& policy = {});

/// y_n - gamma(a) = psi(n+a) - ln(n+a-1), strictly positive.
double residual_y(double a, std::int64_t n, const AccuracyPolicy& policy = {});

/// Rows for n = 1..n_max, ordered by n.
std::vector<SeqPoint> table(double a, std::int64_t n_max, const AccuracyPolicy& policy = {});

}  // namespace gsharp

#endif
