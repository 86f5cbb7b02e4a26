#ifndef GAMMA_SHARP_SPECIAL_FN_HPP
#define GAMMA_SHARP_SPECIAL_FN_HPP

#include "gamma_sharp/policy.hpp"

namespace gsharp {

/// Digamma function psi(x) for x > 0.
///
/// Upward recurrence shifts the argument past policy.shift_cutoff, then the
/// asymptotic series ln z - 1/(2z) - sum B_{2k}/(2k z^{2k}) is applied.
EvalResult psi(double x, const AccuracyPolicy& policy = {});

/// Trigamma function psi'(x) for x > 0.
EvalResult trigamma(double x, const AccuracyPolicy& policy = {});

/// ln(x) - psi(x), computed without cancellation.
///
/// Above the cutoff this is the series 1/(2x) + 1/(12x^2) - 1/(120x^4) + ...
/// evaluated directly; below, the argument is shifted up first.  The result
/// is positive for every x > 0.
EvalResult ln_minus_psi(double x, const AccuracyPolicy& policy = {});

/// psi(x+1) - ln(x) for x > 0, cancellation-free.  Equals 1/x - (ln x - psi x).
EvalResult psi_shift1_minus_ln(double x, const AccuracyPolicy& policy = {});

namespace detail {
/// Magnitude of the first term omitted by the digamma asymptotic series at z
/// (the term with index terms+1).  Used for error accounting and exposed so
/// tests can check the sandwich property of the truncations.
double psi_series_omitted_term(double z, int terms);
/// Coefficient B_{2k}/(2k) of z^{-2k} in ln z - psi(z) - 1/(2z), exact
/// rationals hard-coded through B_34 (k <= 17).
double psi_series_coeff(int k);
/// Number of correction terms actually usable (coefficient table size - 1).
int max_series_terms();
}  // namespace detail

}  // namespace gsharp

#endif
