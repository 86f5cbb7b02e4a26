#ifndef GAMMA_SHARP_POLICY_HPP
#define GAMMA_SHARP_POLICY_HPP

#include <stdexcept>
#include <string>

namespace gsharp {

/// Working-precision and series-truncation configuration shared by all
/// special-function evaluation.
struct AccuracyPolicy {
    /// Minimum argument before the asymptotic series applies.
    double shift_cutoff = 16.0;
    /// Number of asymptotic correction terms beyond ln z - 1/(2z).
    int series_terms = 8;
    double target_rel_error = 1e-13;

    void validate() const {
        if (!(shift_cutoff >= 10.0))
            throw std::invalid_argument("AccuracyPolicy: shift_cutoff must be >= 10");
        if (series_terms < 3 || series_terms > 30)
            throw std::invalid_argument("AccuracyPolicy: series_terms must be in [3, 30]");
        if (!(target_rel_error > 0.0))
            throw std::invalid_argument("AccuracyPolicy: target_rel_error must be > 0");
    }
};

/// A value together with a bound on its absolute error.
struct EvalResult {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

/// The policy cannot meet its target_rel_error (first omitted term too large).
class AccuracyError : public std::runtime_error {
  public:
    explicit AccuracyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A summation guard or similar resource limit was exceeded.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gsharp

#endif
