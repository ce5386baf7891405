#pragma once

/**
 * @file
 * Built-in verification suite: every algebraic identity, conservation law
 * and pipeline cross-check the library promises, runnable on demand (the
 * CLI `verify` command wraps this).
 */

#include <optional>
#include <string>
#include <vector>

#include "pwclock/types.hpp"

namespace pwclock {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      ///< worst deviation observed (check-specific)
    double tolerance = 0.0;  ///< tolerance the check was held to
    std::string detail;      ///< human-readable context / report
};

struct CheckOptions {
    Index dim_min = 2;
    Index dim_max = 16;
    int omega_grid = 32;  ///< number of w values on [0, pi)
    int power_max = 64;   ///< largest exponent for the power oracle check

    /// When set, replaces every check's default tolerance.
    std::optional<double> tolerance_override;

    double tolerance_or(double fallback) const {
        return tolerance_override.value_or(fallback);
    }
};

std::vector<CheckResult> run_all_checks(const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace pwclock
