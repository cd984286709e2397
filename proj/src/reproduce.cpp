#include "wit/reproduce.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "wit/analysis.hpp"
#include "wit/bounds.hpp"
#include "wit/constructions.hpp"
#include "wit/core.hpp"
#include "wit/detail/combinatorics.hpp"
#include "wit/solver.hpp"

namespace wit::repro {

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

std::string steiner_generation() {
    SetFamily f348 = steiner_3_4_8();
    require(f348.size() == 14, "S(3,4,8) must have 14 blocks");
    DesignCheck d348 = check_design(f348, 3);
    require(d348.is_steiner && d348.k == 4, "S(3,4,8) design check failed");
    require(d348.max_pair_intersection <= 2, "S(3,4,8) blocks must pairwise intersect in <= 2");

    SetFamily f5612 = steiner_5_6_12();
    require(f5612.size() == 132, "S(5,6,12) must have 132 blocks");
    DesignCheck d5612 = check_design(f5612, 5);
    require(d5612.is_steiner && d5612.k == 6, "S(5,6,12) design check failed");
    require(d5612.max_pair_intersection <= 4, "S(5,6,12) blocks must pairwise intersect in <= 4");
    return "S(3,4,8): 14 blocks, S(5,6,12): 132 blocks, both distance-4 designs";
}

std::string construction_cardinalities() {
    SetFamily f442 = cw_code_search(4, 4, 2);
    require(f442.size() == 2, "search must find the 2-block A(4,4,2) family");
    Code c6 = from_family(f442);
    require(c6.size() == 6, "A(4,4,2) family must yield 6 words");
    require(has_w_witness_property(c6, 2).holds, "6-word code must verify at w=2");

    Code c70 = from_family(steiner_3_4_8());
    require(c70.size() == 70, "S(3,4,8) family must yield 70 words");
    require(has_w_witness_property(c70, 4).holds, "70-word code must verify at w=4");

    Code c924 = from_family(steiner_5_6_12());
    require(c924.size() == 924, "S(5,6,12) family must yield 924 words");
    require(has_w_witness_property(c924, 6).holds, "924-word code must verify at w=6");
    return "family sizes 6 / 70 / 924, verified at w = 2 / 4 / 6";
}

std::string non_sphere_translate() {
    SetFamily f348 = steiner_3_4_8();
    Code steiner_code = from_family(f348);
    SphereSignature sig = sphere_translate_signature(steiner_code, 4);
    require(!sig.is_sphere_translate, "Steiner-derived code must not be a sphere translate");
    auto it = sig.window_count_histogram.find(5);
    require(it != sig.window_count_histogram.end() && it->second == 14,
            "exactly the 14 blocks must witness 5 codewords each");
    for (const CoordSet& block : f348.blocks())
        require(witnessed_codewords(steiner_code, block).size() == 5,
                "every block must witness exactly 5 codewords");

    Code s84 = sphere(8, 4);
    const std::uint64_t space = std::uint64_t{1} << 8;
    for (std::uint64_t x = 0; x < space; ++x) {
        Code translated = translate(s84, Codeword(8, x));
        SphereSignature tsig = sphere_translate_signature(translated, 4);
        require(tsig.is_sphere_translate, "every sphere translate must be recognized");
        require(tsig.window_count_histogram.size() == 1 &&
                    tsig.window_count_histogram.count(2) == 1 &&
                    tsig.window_count_histogram.at(2) == 70,
                "sphere translates must have the all-2 histogram");
    }
    return "Steiner code: translate=false, 14 windows at count 5; all 256 sphere translates all-2";
}

std::string two_part_improvement() {
    Code c = two_part_sphere(9, 7, 1);
    require(c.size() == 135, "two_part_sphere(9,7,1) must have 135 words");
    require(has_w_witness_property(c, 7).holds, "two-part code must verify at w=7");
    BigInt competitors = binomial(9, 7);
    if (binomial(9, 4) > competitors) competitors = binomial(9, 4);
    if ((BigInt(1) << 7) > competitors) competitors = BigInt(1) << 7;
    require(BigInt(c.size()) > competitors, "135 must beat max(C(9,7), C(9,4), 2^7)");
    require(BigInt(c.size()) <= (BigInt(1) << 7) + binomial(9, 7), "cap 2^w + C(n,w) violated");
    std::ostringstream os;
    os << "|C| = 135 > " << competitors << " = max(C(9,7), C(9,4), 2^7)";
    return os.str();
}

// Bounded uniform draw on a fixed deterministic engine.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::string double_count_identity() {
    std::mt19937_64 rng(20250607);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(draw_below(rng, 12));
        const int w = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n) + 1));
        const std::uint64_t space = std::uint64_t{1} << n;
        const std::uint64_t max_size = std::min<std::uint64_t>(40, space);
        const std::uint64_t target = draw_below(rng, max_size + 1);
        std::set<std::uint64_t> words;
        while (words.size() < target) words.insert(draw_below(rng, space));
        Code C(n, std::vector<std::uint64_t>(words.begin(), words.end()));

        MeanStats stats = mean_stats(C, w);

        // Independent recount of the witness side through the pairwise
        // difference definition (the sweep above groups projections instead).
        BigInt witness_total = 0;
        std::vector<std::uint64_t> per_word(C.size(), 0);
        detail::for_each_window(n, w, [&](std::uint64_t wm) {
            for (std::size_t i = 0; i < C.size(); ++i) {
                const std::uint64_t ci = C.word_bits()[i];
                bool isolated = true;
                for (std::uint64_t cj : C.word_bits())
                    if (cj != ci && ((cj ^ ci) & wm) == 0) {
                        isolated = false;
                        break;
                    }
                if (isolated) {
                    ++per_word[i];
                    ++witness_total;
                }
            }
        });
        for (std::size_t i = 0; i < C.size(); ++i)
            require(per_word[i] == stats.witness_counts[i].second,
                    "per-word witness count mismatch between routes");

        BigInt window_total = 0;
        for (const auto& [window, count] : stats.window_counts) window_total += count;
        require(witness_total == window_total, "sum of witness counts != sum of window counts");
        require(witness_total == stats.total, "double-counted total mismatch");
        require(BigInt(C.size()) * stats.mean_witness_count ==
                    binomial(n, w) * stats.gamma,
                "|C| E_c = C(n,w) E_W violated");
    }
    return "1000 seeded random codes (n <= 12, |C| <= 40): exact identity holds";
}

std::string solver_cross_validation() {
    std::string f42;
    for (int n = 1; n <= 4; ++n) {
        for (int w = 1; w <= n; ++w) {
            SolveOptions enum_opts;
            enum_opts.strategy = SolveStrategy::Enumeration;
            SolveOptions bb_opts;
            bb_opts.strategy = SolveStrategy::BranchAndBound;
            SolverResult by_enum = f_exact(n, w, enum_opts);
            SolverResult by_bb = f_exact(n, w, bb_opts);
            require(by_enum.status == SolveStatus::Exact && by_bb.status == SolveStatus::Exact,
                    "both strategies must finish exactly");
            require(by_enum.value == by_bb.value,
                    "enumeration and branch-and-bound disagree at n=" + std::to_string(n) +
                        ", w=" + std::to_string(w));
            require(verify_certificate(by_enum) && verify_certificate(by_bb),
                    "certificates must re-verify");
            require(by_enum.value >= lower_sphere(n, w) &&
                        by_enum.value <= bounds_report(n, w).best_upper,
                    "solver value must respect the bound sandwich");
            if (n == 4 && w == 2) {
                require(by_enum.value >= 6 && by_enum.value <= 16, "6 <= f(4,2) <= 16 violated");
                f42 = by_enum.value.str();
            }
        }
    }
    return "strategies agree on all (n,w), n <= 4; recorded f(4,2) = " + f42;
}

std::string cw_corollary() {
    struct Case {
        int n, w, k;
    } cases[] = {{4, 2, 1}, {5, 2, 2}, {4, 2, 3}};
    std::ostringstream os;
    for (const auto& [n, w, k] : cases) {
        SolverResult r = f_cw_exact(n, w, k);
        require(r.status == SolveStatus::Exact, "constant-weight solve must be exact");
        auto expected = cw_exact_corollary(n, w, k);
        require(expected.has_value(), "corollary must apply");
        require(r.value == *expected, "f(" + std::to_string(n) + "," + std::to_string(w) + "," +
                                          std::to_string(k) + ") != corollary value");
        os << "f(" << n << "," << w << "," << k << ")=" << r.value << " ";
    }
    return os.str() + "all equal C(n,k)";
}

std::string theorem_invariants() {
    ExactValueCache cache;
    auto record = [&cache](int n, int w) {
        SolverResult r = f_exact(n, w);
        require(r.status == SolveStatus::Exact, "cache seeding solve must be exact");
        cache.insert(CacheKey{n, w, std::nullopt},
                     CacheEntry{r.value, CacheStatus::Exact, "solver", "", ""});
    };
    record(2, 1);
    record(3, 1);
    record(4, 1);
    record(4, 2);
    AuditReport audit = monotonicity_audit(cache);  // throws on violation
    require(!audit.checks.empty(), "audit must compare at least one pair");

    int reports = 0;
    for (int n = 1; n <= 16; ++n) {
        for (int w = 1; w <= n; ++w) {
            BoundReport r = bounds_report(n, w);  // asserts lower <= upper internally
            require(r.best_lower <= r.best_upper, "bound sandwich violated");
            if (2 * w <= n)
                require(upper_improved(n, w) <= upper_simple(n, w),
                        "sqrt refinement must not exceed the pigeonhole bound");
            ++reports;
        }
    }
    return "audit passed (" + std::to_string(audit.checks.size()) + " comparisons); " +
           std::to_string(reports) + " bound reports consistent on the n <= 16 grid";
}

std::string gamma_plus_suite() {
    Rational g31, g41;
    for (int n = 1; n <= 4; ++n) {
        for (int w = 0; w <= n; ++w) {
            GammaPlusResult all = gamma_plus_exhaustive(n, w, GammaRestrict::AllCodes);
            GammaPlusResult wit = gamma_plus_exhaustive(n, w, GammaRestrict::WitnessCodes);
            require(all.value == wit.value, "gamma+ != gamma++ at n=" + std::to_string(n) +
                                                ", w=" + std::to_string(w));
            if (n == 3 && w == 1) g31 = all.value;
            if (n == 4 && w == 1) g41 = all.value;
        }
    }
    require(g31 >= g41, "gamma+(3,1) >= gamma+(4,1) violated");
    std::ostringstream os;
    os << "modes agree for all n <= 4; gamma+(3,1)=" << g31 << " >= gamma+(4,1)=" << g41;
    return os.str();
}

std::string asymptotics_illustration() {
    const double target = binary_entropy(0.25);
    double prev_gap = 2.0;
    double gap160 = 0.0;
    for (int n : {40, 80, 160}) {
        const BigInt c = binomial(n, n / 4);
        const double rate = std::log2(c.convert_to<double>()) / n;
        const double gap = std::abs(target - rate);
        require(gap < prev_gap, "entropy gap must shrink as n grows");
        prev_gap = gap;
        if (n == 160) gap160 = gap;
    }
    require(gap160 <= 0.05, "gap at n=160 must be within 0.05 of h(1/4)");
    std::ostringstream os;
    os << std::setprecision(4) << "gap to h(1/4) at n=160: " << gap160 << " <= 0.05, decreasing over {40,80,160}";
    return os.str();
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& out) {
    using Runner = std::function<std::string()>;
    const std::pair<const char*, Runner> criteria[] = {
        {"steiner-generation", steiner_generation},
        {"construction-cardinalities", construction_cardinalities},
        {"non-sphere-translate", non_sphere_translate},
        {"two-part-improvement", two_part_improvement},
        {"double-count-identity", double_count_identity},
        {"solver-cross-validation", solver_cross_validation},
        {"constant-weight-corollary", cw_corollary},
        {"theorem-invariants", theorem_invariants},
        {"gamma-plus-suite", gamma_plus_suite},
        {"asymptotics-illustration", asymptotics_illustration},
    };

    std::vector<CriterionResult> results;
    int index = 0;
    for (const auto& [name, runner] : criteria) {
        CriterionResult r;
        r.index = ++index;
        r.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.detail = runner();
            r.passed = true;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << "[" << std::setw(2) << r.index << "/10] " << (r.passed ? "PASS" : "FAIL") << "  "
            << std::left << std::setw(28) << r.name << std::right << " (" << std::fixed
            << std::setprecision(2) << r.seconds << "s)  " << r.detail << "\n"
            << std::defaultfloat;
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return !results.empty();
}

}  // namespace wit::repro
