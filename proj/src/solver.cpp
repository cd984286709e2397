#include "wit/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "wit/core.hpp"
#include "wit/detail/combinatorics.hpp"
#include "wit/hitting.hpp"

namespace wit {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;
    bool expired = false;

    explicit Deadline(const SolveLimits& limits) {
        if (limits.time_limit_seconds)
            at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(*limits.time_limit_seconds));
    }

    bool check() {
        if (expired) return true;
        if (at && Clock::now() >= *at) expired = true;
        return expired;
    }
};

// Candidate order: weight, then value (= bitstring-lexicographic).
std::vector<std::uint64_t> ordered_words(int n) {
    std::vector<std::uint64_t> words;
    const std::uint64_t space = std::uint64_t{1} << n;
    words.reserve(space);
    for (std::uint64_t v = 0; v < space; ++v) words.push_back(v);
    std::sort(words.begin(), words.end(), [](std::uint64_t a, std::uint64_t b) {
        int wa = std::popcount(a), wb = std::popcount(b);
        return wa != wb ? wa < wb : a < b;
    });
    return words;
}

std::vector<std::uint64_t> ordered_weight_k_words(int n, int k) {
    std::vector<std::uint64_t> words;
    detail::for_each_window(n, k, [&](std::uint64_t m) { words.push_back(m); });
    std::sort(words.begin(), words.end());
    return words;
}

// Does every word of the subset (given as a bitmask over `space` values) have
// a witness of size exactly w?  Projection-based: independent of the
// hitting-set machinery used by the branch-and-bound path.
bool subset_has_property(std::uint64_t member_mask, int space, std::uint64_t* words,
                         const std::vector<std::uint64_t>& windows) {
    int m = 0;
    for (int v = 0; v < space; ++v)
        if (member_mask & (std::uint64_t{1} << v)) words[m++] = static_cast<std::uint64_t>(v);
    if (m <= 1) return true;
    std::uint32_t witnessed = 0;
    const std::uint32_t all = (std::uint32_t{1} << m) - 1;
    for (std::uint64_t wm : windows) {
        for (int i = 0; i < m; ++i) {
            if (witnessed & (std::uint32_t{1} << i)) continue;
            const std::uint64_t proj = words[i] & wm;
            bool unique = true;
            for (int j = 0; j < m; ++j)
                if (j != i && (words[j] & wm) == proj) {
                    unique = false;
                    break;
                }
            if (unique) witnessed |= std::uint32_t{1} << i;
        }
        if (witnessed == all) return true;
    }
    return witnessed == all;
}

SolverResult run_enumeration(int n, int w, const SolveOptions& options) {
    const int space = 1 << n;
    std::vector<std::uint64_t> windows;
    detail::for_each_window(n, w, [&](std::uint64_t m) { windows.push_back(m); });

    Deadline deadline(options.limits);
    SolverResult result;
    result.n = n;
    result.w = w;
    result.strategy = SolveStrategy::Enumeration;

    std::uint64_t best_mask = 0;
    int best = 0;
    std::uint64_t words[16];
    const std::uint64_t code_count = std::uint64_t{1} << space;
    std::uint64_t mask = 0;
    for (; mask < code_count; ++mask) {
        if ((mask & 0xfff) == 0 && deadline.check()) break;
        if (options.limits.node_limit && mask >= *options.limits.node_limit) {
            deadline.expired = true;
            break;
        }
        if (std::popcount(mask) <= best) continue;
        if (subset_has_property(mask, space, words, windows)) {
            best = std::popcount(mask);
            best_mask = mask;
        }
    }

    result.nodes = mask;
    result.status = deadline.expired ? SolveStatus::LowerBound : SolveStatus::Exact;
    result.value = best;
    std::vector<std::uint64_t> code_words;
    for (int v = 0; v < space; ++v)
        if (best_mask & (std::uint64_t{1} << v)) code_words.push_back(static_cast<std::uint64_t>(v));
    result.certificate = Code(n, std::move(code_words));
    return result;
}

struct BranchAndBound {
    int n;
    int w;
    std::optional<int> weight_k;  // constant-weight mode when set
    const SolveOptions& options;
    std::vector<std::uint64_t> candidates;
    std::uint64_t universe;
    std::size_t ub_global;

    std::vector<std::uint64_t> members;
    std::vector<std::uint64_t> witnesses;
    std::vector<std::uint64_t> best_code;
    std::size_t best = 0;
    std::uint64_t nodes = 0;
    Deadline deadline;
    bool done = false;

    BranchAndBound(int n_, int w_, std::optional<int> k_, const SolveOptions& opts)
        : n(n_), w(w_), weight_k(k_), options(opts), universe(detail::full_mask(n_)),
          deadline(opts.limits) {
        candidates = weight_k ? ordered_weight_k_words(n, *weight_k) : ordered_words(n);

        const ExactValueCache empty_cache;
        BigInt ub = bounds_report(n, w, options.cache ? *options.cache : empty_cache).best_upper;
        ub_global = candidates.size();
        if (ub < BigInt(ub_global)) ub_global = static_cast<std::size_t>(ub);
    }

    bool try_add(std::uint64_t x) {
        // Members whose stored witness no longer separates them from x need a
        // fresh witness; x itself needs one too.
        std::vector<std::pair<std::size_t, std::uint64_t>> staged;
        std::vector<std::uint64_t> fam;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (((members[i] ^ x) & witnesses[i]) != 0) continue;
            fam.clear();
            for (std::size_t j = 0; j < members.size(); ++j)
                if (j != i) fam.push_back(members[i] ^ members[j]);
            fam.push_back(members[i] ^ x);
            auto h = hitting_set_within(fam, universe, w);
            if (!h) {
                log_prune(x);
                return false;
            }
            staged.emplace_back(i, *h);
        }
        fam.clear();
        for (std::uint64_t m : members) fam.push_back(m ^ x);
        auto hx = hitting_set_within(fam, universe, w);
        if (!hx) {
            log_prune(x);
            return false;
        }
        for (auto [i, wit_mask] : staged) witnesses[i] = wit_mask;
        members.push_back(x);
        witnesses.push_back(*hx);
        return true;
    }

    void log_prune(std::uint64_t x) const {
        if (!options.prune_log) return;
        std::vector<std::uint64_t> ws = members;
        ws.push_back(x);
        options.prune_log(Code(n, std::move(ws)));
    }

    void record_incumbent() {
        if (members.size() > best) {
            best = members.size();
            best_code = members;
            if (best >= ub_global) done = true;
        }
    }

    void recurse(std::size_t idx) {
        ++nodes;
        if (done) return;
        if ((nodes & 0x3ff) == 0 && deadline.check()) return;
        if (options.limits.node_limit && nodes >= *options.limits.node_limit) {
            deadline.expired = true;
            return;
        }
        if (idx == candidates.size()) return;
        if (members.size() + (candidates.size() - idx) <= best) return;

        const std::uint64_t x = candidates[idx];
        // Include branch.
        std::vector<std::uint64_t> saved_witnesses;  // small; simpler than a diff log
        if (!options.isomorph_rejection || members.size() >= 2 || will_be_canonical(x)) {
            saved_witnesses = witnesses;
            if (try_add(x)) {
                record_incumbent();
                recurse(idx + 1);
                members.pop_back();
                witnesses = std::move(saved_witnesses);
                if (done) return;
            }
        }
        // Skip branch.
        recurse(idx + 1);
    }

    // Depth <= 2 minimum-image canonical check for the code obtained by
    // adding x.  Unrestricted mode: the group is translations + coordinate
    // permutations, so the first member must be 0 and the second the
    // smallest word of its weight class.  Constant-weight mode: permutations
    // only; the minimal pair shape is determined by the intersection size.
    bool will_be_canonical(std::uint64_t x) const {
        if (members.size() > 1) return true;
        if (!weight_k) {
            if (members.empty()) return x == 0;
            return x == (std::uint64_t{1} << std::popcount(x)) - 1;
        }
        const int k = *weight_k;
        const std::uint64_t first = (std::uint64_t{1} << k) - 1;
        if (members.empty()) return x == first;
        if (members[0] != first) return true;  // prefix already non-canonical; unreachable
        const int i = std::popcount(members[0] & x);
        const std::uint64_t second =
            ((std::uint64_t{1} << i) - 1) | (((std::uint64_t{1} << (k - i)) - 1) << k);
        return x == second;
    }

    SolverResult run() {
        const auto start = Clock::now();
        record_incumbent();  // empty incumbent (best = 0)
        recurse(0);
        SolverResult result;
        result.n = n;
        result.w = w;
        result.k = weight_k;
        result.value = best;
        result.status = deadline.expired ? SolveStatus::LowerBound : SolveStatus::Exact;
        result.certificate = Code(n, best_code);
        result.nodes = nodes;
        result.strategy = SolveStrategy::BranchAndBound;
        result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return result;
    }
};

void check_certificate_or_throw(const SolverResult& result) {
    if (!verify_certificate(result))
        throw std::logic_error("solver produced an invalid certificate");
}

}  // namespace

SolverResult f_exact(int n, int w, const SolveOptions& options) {
    if (w < 1 || w > n) throw std::invalid_argument("require 1 <= w <= n");
    if (n > 6) throw std::domain_error("f_exact supports n <= 6 only");

    SolveStrategy strategy = options.strategy;
    if (strategy == SolveStrategy::Auto)
        strategy = n <= 4 ? SolveStrategy::Enumeration : SolveStrategy::BranchAndBound;
    if (strategy == SolveStrategy::Enumeration && n > 4)
        throw std::domain_error("full enumeration supports n <= 4 only");

    SolverResult result;
    const auto start = Clock::now();
    if (strategy == SolveStrategy::Enumeration) {
        result = run_enumeration(n, w, options);
        result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    } else {
        BranchAndBound search(n, w, std::nullopt, options);
        result = search.run();
    }
    check_certificate_or_throw(result);
    return result;
}

SolverResult f_cw_exact(int n, int w, int k, const SolveOptions& options) {
    if (w < 0 || w > n) throw std::invalid_argument("require 0 <= w <= n");
    if (k < 0 || k > n) throw std::invalid_argument("require 0 <= k <= n");
    if (n > 12) throw std::domain_error("f_cw_exact supports n <= 12 only");

    BranchAndBound search(n, w, k, options);
    SolverResult result = search.run();
    check_certificate_or_throw(result);
    return result;
}

bool verify_certificate(const SolverResult& result) {
    try {
        const Code& cert = result.certificate;
        if (cert.length() != result.n) return false;
        if (BigInt(cert.size()) != result.value) return false;
        if (result.k)
            for (std::uint64_t v : cert.word_bits())
                if (std::popcount(v) != *result.k) return false;
        return has_w_witness_property(cert, std::min(result.w, result.n)).holds;
    } catch (const std::exception&) {
        return false;
    }
}

ProbeReport open_problem_probe(int w, const SolveLimits& limits) {
    if (w < 1 || w > 3) throw std::domain_error("open_problem_probe supports w in {1,2,3}");
    const int n0 = 2 * w;

    SolveOptions options;
    options.limits = limits;
    if (w == 3 && !limits.time_limit_seconds) options.limits.time_limit_seconds = 5.0;

    ProbeReport report;
    report.w = w;
    report.base = f_exact(n0, w, options);
    report.central = binomial(n0, w);
    report.matches_sphere =
        report.base.status == SolveStatus::Exact && report.base.value == report.central;

    ExactValueCache cache;
    cache.insert(CacheKey{n0, w, std::nullopt},
                 CacheEntry{report.base.value,
                            report.base.status == SolveStatus::Exact ? CacheStatus::Exact
                                                                     : CacheStatus::LowerBound,
                            "open_problem_probe", "", ""});
    for (int n = n0; n <= n0 + 8; ++n) {
        BoundReport bounds = bounds_report(n, w, cache);
        ProbeRow row;
        row.n = n;
        row.lower = bounds.exact ? *bounds.exact : bounds.best_lower;
        row.upper = bounds.exact ? *bounds.exact : bounds.best_upper;
        // f is nondecreasing in n, so the base value is a lower bound too.
        if (report.base.value > row.lower) row.lower = report.base.value;
        row.pinned = row.lower == row.upper;
        report.rows.push_back(row);
    }
    return report;
}

AuditReport monotonicity_audit(const ExactValueCache& cache) {
    std::vector<std::pair<CacheKey, BigInt>> exact;
    for (const auto& [key, entry] : cache.entries())
        if (!key.k && entry.status == CacheStatus::Exact) exact.emplace_back(key, entry.value);

    AuditReport report;
    auto expect = [&report](bool ok, std::string what) {
        if (!ok) throw std::logic_error("monotonicity violated: " + what);
        report.checks.push_back({std::move(what), true});
    };

    for (std::size_t i = 0; i < exact.size(); ++i) {
        for (std::size_t j = 0; j < exact.size(); ++j) {
            const auto& [a, fa] = exact[i];
            const auto& [b, fb] = exact[j];
            if (a.w == b.w && a.n < b.n) {
                expect(fa <= fb, "f(" + std::to_string(a.n) + "," + std::to_string(a.w) +
                                     ") <= f(" + std::to_string(b.n) + "," + std::to_string(b.w) + ")");
                // g(n,w) = f(n,w)/C(n,w) nonincreasing in n.
                expect(fa * binomial(b.n, b.w) >= fb * binomial(a.n, a.w),
                       "g(" + std::to_string(a.n) + "," + std::to_string(a.w) + ") >= g(" +
                           std::to_string(b.n) + "," + std::to_string(b.w) + ")");
            }
            if (a.n == b.n && a.w < b.w)
                expect(fa <= fb, "f(" + std::to_string(a.n) + "," + std::to_string(a.w) +
                                     ") <= f(" + std::to_string(b.n) + "," + std::to_string(b.w) + ")");
        }
    }
    return report;
}

}  // namespace wit
