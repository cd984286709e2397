// solver.hpp -- exact values of f(n,w) and f(n,w,k) at desk scale.
//
// Tiny lengths (n <= 4) go through full enumeration of all 2^(2^n) subsets
// of the cube.  For n in {5,6} the solver runs an ordered branch-and-bound
// over candidate words: the w-witness property is hereditary (every subcode
// of a feasible code is feasible), so an infeasible partial code prunes its
// whole supertree.  Additional pruning: incumbent + remaining candidates,
// the bounds module's best upper bound, and isomorph rejection at depth <= 2
// under the code isometry group (translations and coordinate permutations;
// permutations only in constant-weight mode).

#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wit/bounds.hpp"
#include "wit/numeric.hpp"
#include "wit/types.hpp"

namespace wit {

enum class SolveStrategy { Auto, Enumeration, BranchAndBound };
enum class SolveStatus { Exact, LowerBound };

struct SolveLimits {
    std::optional<double> time_limit_seconds;
    std::optional<std::uint64_t> node_limit;
};

struct SolverResult {
    int n = 0;
    int w = 0;
    std::optional<int> k;
    BigInt value;
    SolveStatus status = SolveStatus::Exact;
    Code certificate{1};
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
    SolveStrategy strategy = SolveStrategy::Enumeration;  // the one actually used
    bool deterministic = true;                            // no seeds anywhere in the search
};

struct SolveOptions {
    SolveStrategy strategy = SolveStrategy::Auto;
    SolveLimits limits;
    bool isomorph_rejection = true;
    const ExactValueCache* cache = nullptr;  // consulted once for upper-bound pruning
    /// Called with each partial code rejected by the hereditary feasibility
    /// check (test hook; leave empty in normal use).
    std::function<void(const Code&)> prune_log;
};

/// Maximum cardinality of a w-witness code of length n; 1 <= w <= n <= 6.
SolverResult f_exact(int n, int w, const SolveOptions& options = {});

/// Same restricted to codewords of weight exactly k; n <= 12.
SolverResult f_cw_exact(int n, int w, int k, const SolveOptions& options = {});

/// Re-checks every SolverResult invariant (certificate property, size,
/// weights).  Never throws; false on any violation.
bool verify_certificate(const SolverResult& result);

struct ProbeRow {
    int n = 0;
    BigInt lower;
    BigInt upper;
    bool pinned = false;  // lower == upper
};

struct ProbeReport {
    int w = 0;
    SolverResult base;      // the f(2w, w) run
    BigInt central;         // C(2w, w)
    bool matches_sphere = false;
    std::vector<ProbeRow> rows;  // implied bounds for n = 2w .. 2w+8
};

/// Computes f(2w,w), compares it with C(2w,w) and propagates the result to
/// larger n through the monotonicity combiner.  Exact for w in {1,2}; w = 3
/// runs time-limited and reports a lower bound.
ProbeReport open_problem_probe(int w, const SolveLimits& limits = {});

struct AuditCheck {
    std::string description;
    bool ok = true;
};

struct AuditReport {
    std::vector<AuditCheck> checks;
};

/// Asserts, over the exact unrestricted entries of the cache: f nondecreasing
/// in n and in w, and g(n,w) = f(n,w)/C(n,w) nonincreasing in n at fixed w.
/// These are theorems, so a violation throws std::logic_error.
AuditReport monotonicity_audit(const ExactValueCache& cache);

}  // namespace wit
