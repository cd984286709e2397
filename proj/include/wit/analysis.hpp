// analysis.hpp -- minimum witnesses, uniform witnesses and mean-value
// statistics of witness counts.
//
// Finding a minimum witness for c is a minimum hitting set problem over the
// difference supports of c against the rest of the code; exact mode solves it
// by branch-and-bound, greedy mode by the usual most-hits heuristic.  The
// mean-value machinery counts, for a fixed window size w, how many size-w
// windows witness each codeword and how many codewords each window
// witnesses; the two count families are linked by an exact double-counting
// identity.

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "wit/numeric.hpp"
#include "wit/types.hpp"

namespace wit {

enum class SearchMode { Exact, Greedy };

/// A minimum-size witness for c within C (exact mode: minimum cardinality,
/// lexicographically smallest; greedy mode: valid but possibly larger).
CoordSet min_witness(const Code& C, const Codeword& c, SearchMode mode = SearchMode::Exact);

struct WitnessProfile {
    /// Exact minimum witness size per codeword, sorted by word.
    std::vector<std::pair<Codeword, int>> sizes;
    /// The least w for which C is a w-witness code (0 for |C| <= 1).
    int parameter = 0;
};

WitnessProfile witness_profile(const Code& C);

/// A window W with all |C| projections pairwise distinct.  Exact mode returns
/// the minimum-cardinality, lexicographically smallest such window.  [n]
/// always works, so this never fails.
CoordSet min_uniform_witness(const Code& C, SearchMode mode = SearchMode::Exact);

/// All witnesses of c of size exactly w, in lexicographic order.
std::vector<CoordSet> witness_sets(const Code& C, const Codeword& c, int w);

/// All codewords witnessed by W, sorted.
std::vector<Codeword> witnessed_codewords(const Code& C, const CoordSet& W);

struct MeanStats {
    int n = 0;
    int w = 0;
    /// Per codeword: number of size-w windows witnessing it.
    std::vector<std::pair<Codeword, std::uint64_t>> witness_counts;
    /// Per size-w window (all C(n,w) of them, lexicographic): number of
    /// codewords it witnesses.
    std::vector<std::pair<CoordSet, std::uint64_t>> window_counts;
    /// E_c |W_{C,w}(c)| and gamma = E_W |C_{C,w}(W)|, exact; 0 for empty data.
    Rational mean_witness_count{0};
    Rational gamma{0};
    /// The double-counted total: sum of either count family.
    BigInt total{0};
};

/// Both count families plus exact means; asserts the double-count identity
/// |C| * E_c = C(n,w) * E_W exactly.  Guarded against huge window counts.
MeanStats mean_stats(const Code& C, int w);

/// gamma(C, w) alone, without materializing the count maps.
Rational gamma_mean(const Code& C, int w);

/// The subcode of words having at least one witness of size exactly w.
Code witnessed_subcode(const Code& C, int w);

enum class GammaRestrict { AllCodes, WitnessCodes };

struct GammaPlusResult {
    Rational value{0};
    Code argmax;
};

/// Maximum of gamma(C, w) over all codes of length n (or only w-witness
/// codes), by enumeration of all 2^(2^n) codes; n <= 4.
GammaPlusResult gamma_plus_exhaustive(int n, int w, GammaRestrict restrict_to);

}  // namespace wit
