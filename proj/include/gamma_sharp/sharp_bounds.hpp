#ifndef GAMMA_SHARP_SHARP_BOUNDS_HPP
#define GAMMA_SHARP_SHARP_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gamma_sharp/policy.hpp"
#include "gamma_sharp/report.hpp"

namespace gsharp {

/// Bound families.  THM13_*/THM14_* are the sharp two-parameter families;
/// the rest are the prior comparators.  Classical families (ALZER, TOTH,
/// CHEN, QIU) require a = 1 and bound res_y (= gamma_n - gamma at a = 1).
enum class Family {
    THM13_X,
    THM13_Y,
    THM14_X,
    THM14_Y,
    SINT,
    BM11,
    BM12,
    ALZER,
    TOTH,
    CHEN,
    QIU,
};

enum class Side { LO, HI };

enum class EncloseMethod { THM13_X, THM13_Y, THM14_X, THM14_Y, INTERSECT };

std::string to_string(Family f);
std::string to_string(Side s);
std::string to_string(EncloseMethod m);

/// The eight sharp constants plus d for a given a.
struct BestConstants {
    double a = 0.0;
    double alpha1 = 0.0, beta1 = 0.0;
    double alpha2 = 0.0, beta2 = 0.0;
    double alpha3 = 0.0, beta3 = 0.0;
    double alpha4 = 0.0, beta4 = 0.0;
    double d = 0.0;
    int argmax_n = 1;     // index in {1,2,3} attaining d
    bool d_tie = false;   // top-two gap within combined error bounds
};

/// A certified interval containing gamma(a).  Endpoints are padded outward
/// by the evaluation error bounds, so containment survives rounding.
struct Enclosure {
    double a = 0.0;
    std::int64_t n = 0;
    double lo = 0.0;
    double hi = 0.0;
    EncloseMethod method = EncloseMethod::THM14_X;
};

/// f1(x) = 1/(ln x - psi x) - 2x on (1, inf), decreasing onto (-1/3, 1/gamma - 2).
double f1(double x, const AccuracyPolicy& policy = {});

/// f2tilde(x) = 1/(2(psi(x+1) - ln x)) - x on (0, inf), limit 1/6.
double f2tilde(double x, const AccuracyPolicy& policy = {});

/// f3(x) = x^2 (psi x - ln x) + x/2 on (0, inf), decreasing and convex onto
/// (-1/12, 0).
double f3(double x, const AccuracyPolicy& policy = {});

BestConstants best_constants(double a, const AccuracyPolicy& policy = {});

/// The lower/upper comparator value for the residual the family bounds.
/// For BM12, which provides lower bounds only, the side selects the
/// residual: LO is the x-side bound (a >= 13/30), HI the y-side bound
/// (a >= 17/30).
double bound_residual(double a, std::int64_t n, Family family, Side side,
                      const AccuracyPolicy& policy = {});

Enclosure enclose(double a, std::int64_t n, EncloseMethod method,
                  const AccuracyPolicy& policy = {});

/// Checks the four sharp two-sided inequalities at every (a, n) pair.
/// A point fails when the bound is violated by more than rel_tol relative
/// to the bound value.
ScanReport inequality_grid_scan(const std::vector<double>& a_values,
                                const std::vector<std::int64_t>& n_values, double rel_tol,
                                const AccuracyPolicy& policy = {});

/// The a-grid the verification suites default to: 0.1..10 step 0.1 plus the
/// 13/30 and 17/30 thresholds.
std::vector<double> default_a_grid();

/// 1..100 plus logarithmic points up to n_max.
std::vector<std::int64_t> default_n_grid(std::int64_t n_max = 100000);

/// Verifies equality attainment at the small-n index and monotone approach
/// of the defining sequence to its limit constant.
ScanReport sharpness_scan(double a, Family family, std::int64_t n_max, double eps,
                          const AccuracyPolicy& policy = {});

}  // namespace gsharp

#endif
