#pragma once

#include <functional>

#include "selfdual/numbers.hpp"

namespace selfdual {

// The built-in verification suite: every classification this library's
// fixture catalog inherits from the published source, checked end to end,
// plus the cross-checks between the independent decision routes.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    // Known discrepancies in the published source, reported as notes rather
    // than failures.
    std::vector<std::string> notes;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

// Runs the whole suite. `inject_failure` flips the named check's
// expectation, which exists so the failure path can be exercised.
VerificationReport run_verification(const std::string& inject_failure = {});

}  // namespace selfdual
