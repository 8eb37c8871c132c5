#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altchar {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool correct = false;
    double seconds = 0.0;
    double limit_seconds = 0.0;
    std::string detail;  // counts on success, first discrepancy on failure

    bool passed() const { return correct && seconds < limit_seconds; }
};

/// Number of acceptance criteria.
inline constexpr int kCriterionCount = 9;

/// Runs one criterion (1-based). Exceptions inside the check count as a
/// failure and are reported in `detail`.
CriterionResult run_criterion(int id);

/// Runs the given criteria in order; writes one line per criterion to `out`
/// as each finishes, if `out` is non-null.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, std::ostream* out);

/// "PASS [3] name (1.23 s / limit 300 s): detail".
std::string format_result(const CriterionResult& r);

}  // namespace altchar
