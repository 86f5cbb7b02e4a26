#ifndef GAMMA_SHARP_REPORT_HPP
#define GAMMA_SHARP_REPORT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace gsharp {

/// One violated check inside a scan.
struct Failure {
    std::string where;  // grid location, e.g. "x=2.3" or "a=0.1,n=7"
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;  // lhs - rhs; positive means violated
};

/// Outcome of a grid verification.  Violations are measured as lhs - rhs
/// with the convention "<= 0 means the check holds".
struct ScanReport {
    std::string suite;
    std::string domain;
    std::int64_t points_checked = 0;
    std::vector<Failure> failures;
    double max_violation = -std::numeric_limits<double>::infinity();
    bool passed = true;
    /// Differences too small to call against the error bounds (counted, not
    /// failed).
    std::int64_t inconclusive = 0;
    /// Final distance to the limit constant for limit-sharpness scans.
    double limit_gap = std::numeric_limits<double>::quiet_NaN();

    void record(const std::string& where, const std::string& check, double lhs, double rhs) {
        ++points_checked;
        const double gap = lhs - rhs;
        if (gap > max_violation) max_violation = gap;
        if (gap > 0.0) {
            failures.push_back({where, check, lhs, rhs, gap});
            passed = false;
        }
    }

    void merge(const ScanReport& other) {
        points_checked += other.points_checked;
        inconclusive += other.inconclusive;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        if (other.max_violation > max_violation) max_violation = other.max_violation;
        passed = passed && other.passed;
    }
};

}  // namespace gsharp

#endif
