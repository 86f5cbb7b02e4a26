#include "gamma_sharp/special_fn.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace gsharp {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Rational {
    std::int64_t num;
    std::int64_t den;
};

// Bernoulli numbers B_2 .. B_34 as exact rationals.
constexpr Rational kBernoulli[] = {
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
    {8553103, 6},
    {-23749461029LL, 870},
    {8615841276005LL, 14322},
    {-7709321041217LL, 510},
    {2577687858367LL, 6},
};
constexpr int kBernoulliCount = static_cast<int>(sizeof(kBernoulli) / sizeof(kBernoulli[0]));

// B_{2k} for k in [1, kBernoulliCount].
double bernoulli2k(int k) {
    const Rational& r = kBernoulli[k - 1];
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

int clamp_terms(int requested) {
    // Coefficients beyond B_34 are not tabulated; the first-omitted-term
    // bound still needs one extra coefficient.
    return std::min(requested, kBernoulliCount - 1);
}

void check_domain(double x, const char* fn) {
    if (!(x > 0.0))
        throw std::domain_error(std::string(fn) + ": argument must be > 0, got " +
                                std::to_string(x));
}

void check_accuracy(double omitted, double value, const AccuracyPolicy& policy, const char* fn) {
    if (omitted > policy.target_rel_error * std::abs(value))
        throw AccuracyError(std::string(fn) +
                            ": first omitted series term exceeds target_rel_error");
}

// Tail of ln z - psi(z) - 1/(2z) as sum_{k=1..terms} B_{2k}/(2k z^{2k}),
// plus the magnitude of the first omitted term.
struct SeriesTail {
    double sum;
    double omitted;
    double round;  // rounding bound for the partial sum
};

SeriesTail psi_log_tail(double z, int terms) {
    const double inv_z2 = 1.0 / (z * z);
    double p = 1.0;
    double sum = 0.0;
    double mag = 0.0;
    for (int k = 1; k <= terms; ++k) {
        p *= inv_z2;
        const double term = bernoulli2k(k) / (2 * k) * p;
        sum += term;
        mag += std::abs(term);
    }
    const int k1 = terms + 1;
    const double omitted = std::abs(bernoulli2k(k1)) / (2 * k1) * p * inv_z2;
    return {sum, omitted, (terms + 1) * kEps * mag};
}

}  // namespace

namespace detail {

double psi_series_omitted_term(double z, int terms) {
    return psi_log_tail(z, clamp_terms(terms)).omitted;
}

double psi_series_coeff(int k) { return bernoulli2k(k) / (2 * k); }

int max_series_terms() { return kBernoulliCount - 1; }

}  // namespace detail

EvalResult psi(double x, const AccuracyPolicy& policy) {
    policy.validate();
    check_domain(x, "psi");
    const int terms = clamp_terms(policy.series_terms);

    double z = x;
    double shift_sum = 0.0;
    int steps = 0;
    while (z < policy.shift_cutoff) {
        shift_sum += 1.0 / z;
        z += 1.0;
        ++steps;
    }
    const SeriesTail tail = psi_log_tail(z, terms);
    const double log_z = std::log(z);
    const double value = log_z - 0.5 / z - tail.sum - shift_sum;

    double err = tail.omitted + tail.round;
    err += kEps * (std::abs(log_z) + 0.5 / z);
    err += (steps + 1) * kEps * shift_sum;
    err += 2 * kEps * std::abs(value);
    check_accuracy(tail.omitted, value, policy, "psi");
    return {value, err};
}

EvalResult trigamma(double x, const AccuracyPolicy& policy) {
    policy.validate();
    check_domain(x, "trigamma");
    const int terms = clamp_terms(policy.series_terms);

    double z = x;
    double shift_sum = 0.0;
    int steps = 0;
    while (z < policy.shift_cutoff) {
        shift_sum += 1.0 / (z * z);
        z += 1.0;
        ++steps;
    }
    // psi'(z) ~ 1/z + 1/(2z^2) + sum B_{2k} / z^{2k+1}
    const double inv_z = 1.0 / z;
    const double inv_z2 = inv_z * inv_z;
    double p = inv_z;
    double series = 0.0;
    double mag = 0.0;
    for (int k = 1; k <= terms; ++k) {
        p *= inv_z2;
        const double term = bernoulli2k(k) * p;
        series += term;
        mag += std::abs(term);
    }
    const double omitted = std::abs(bernoulli2k(terms + 1)) * p * inv_z2;
    const double value = inv_z + 0.5 * inv_z2 + series + shift_sum;

    double err = omitted + (terms + 1) * kEps * mag;
    err += (steps + 1) * kEps * shift_sum;
    err += 3 * kEps * std::abs(value);
    check_accuracy(omitted, value, policy, "trigamma");
    return {value, err};
}

EvalResult ln_minus_psi(double x, const AccuracyPolicy& policy) {
    policy.validate();
    check_domain(x, "ln_minus_psi");
    const int terms = clamp_terms(policy.series_terms);

    if (x >= policy.shift_cutoff) {
        const SeriesTail tail = psi_log_tail(x, terms);
        const double value = 0.5 / x + tail.sum;
        double err = tail.omitted + tail.round + 2 * kEps * std::abs(value);
        check_accuracy(tail.omitted, value, policy, "ln_minus_psi");
        return {value, err};
    }

    // ln(x) - psi(x) = ln(x/(x+m)) + sum_{j<m} 1/(x+j) + [ln(x+m) - psi(x+m)]
    const int m = static_cast<int>(std::ceil(policy.shift_cutoff - x));
    double shift_sum = 0.0;
    for (int j = 0; j < m; ++j) shift_sum += 1.0 / (x + j);
    const double z = x + m;
    const SeriesTail tail = psi_log_tail(z, terms);
    const double log_ratio = std::log(x / z);
    const double value = log_ratio + shift_sum + 0.5 / z + tail.sum;

    double err = tail.omitted + tail.round;
    err += kEps * (std::abs(log_ratio) + 0.5 / z);
    err += (m + 1) * kEps * shift_sum;
    err += 3 * kEps * std::abs(value);
    check_accuracy(tail.omitted, value, policy, "ln_minus_psi");
    return {value, err};
}

EvalResult psi_shift1_minus_ln(double x, const AccuracyPolicy& policy) {
    policy.validate();
    check_domain(x, "psi_shift1_minus_ln");
    const int terms = clamp_terms(policy.series_terms);

    if (x >= policy.shift_cutoff) {
        // psi(x+1) - ln(x) = 1/(2x) - sum B_{2k}/(2k x^{2k})
        const SeriesTail tail = psi_log_tail(x, terms);
        const double value = 0.5 / x - tail.sum;
        double err = tail.omitted + tail.round + 2 * kEps * std::abs(value);
        check_accuracy(tail.omitted, value, policy, "psi_shift1_minus_ln");
        return {value, err};
    }
    const EvalResult r = ln_minus_psi(x, policy);
    const double inv_x = 1.0 / x;
    const double value = inv_x - r.value;
    return {value, r.abs_error_bound + kEps * (inv_x + std::abs(value))};
}

}  // namespace gsharp
