#pragma once

#include <string>
#include <vector>

namespace arq {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The acceptance checks, in order, all in exact arithmetic.  A failing
// criterion names its first offending case in `detail`; a passing one
// summarizes what was covered.  Typical total runtime is well under a
// minute.
std::vector<CriterionResult> run_selftest();

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace arq
