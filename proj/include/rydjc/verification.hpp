#pragma once

// Cross-checks of every closed form against the brute-force oracle. Used by
// `rydjc verify`.

#include <iosfwd>
#include <string>
#include <vector>

namespace rydjc {

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;  // negative: exploratory, never fails
    bool passed = true;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_passed() const noexcept;
};

// Every tolerance is multiplied by `tolerance_scale`.
VerificationReport run_verification(double tolerance_scale = 1.0);

void print_report(std::ostream& os, const VerificationReport& report);

}  // namespace rydjc
