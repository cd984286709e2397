// reproduce.hpp -- one entry point that re-derives every headline number of
// the library (construction cardinalities, design checks, solver values,
// mean-value identities, bound invariants) and reports pass/fail per check.
// Self-contained: no files, no network, no pre-existing cache.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wit::repro {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs all criteria in order, printing one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_all(std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace wit::repro
