// bounds.hpp -- closed-form lower/upper bounds on f(n,w), the maximum size
// of a length-n code in which every codeword has a witness of size w.
//
// Lower bounds come from explicit constructions (sphere, half-sphere, cube
// on a window, Steiner-derived families, the two-part construction).  Upper
// bounds: the pigeonhole bound 2^w C(n,w); the 2 sqrt(w) C(n,w) refinement
// for w <= n/2; and the monotonicity combiner, which exploits that
// g(n,w) = f(n,w)/C(n,w) is nonincreasing in n, so any exact or upper value
// F(v,w) for w <= v <= n yields f(n,w) <= C(n,w) F(v,w) / C(v,w).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wit/numeric.hpp"

namespace wit {

/// Exact C(n,k); throws std::domain_error outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// |ball of radius r in {0,1}^w| = sum_{i=0}^{r} C(w,i); 0 <= r <= w.
BigInt ball_size(int w, int r);

/// f(n,w) >= C(n,w): all words of weight w, each witnessed by its support.
BigInt lower_sphere(int n, int w);

struct Provenanced {
    BigInt value;
    std::string provenance;
};

/// Best construction-based lower bound: max over sphere, half-sphere (when
/// w >= floor(n/2)), cube 2^w, Steiner-family values from the built-in
/// A(n,d,w) table, and the two-part family over all valid t.
Provenanced lower_best_construction(int n, int w);

/// Pigeonhole: f(n,w) <= 2^w C(n,w), capped at 2^n.
BigInt upper_simple(int n, int w);

/// f(n,w) <= floor(2 sqrt(w) C(n,w)) for 1 <= w <= floor(n/2), capped at 2^n.
BigInt upper_improved(int n, int w);

enum class CacheStatus { Exact, LowerBound, UpperBound };

struct CacheKey {
    int n = 0;
    int w = 0;
    std::optional<int> k;  // constant-weight restriction, when present
    auto operator<=>(const CacheKey&) const = default;
};

struct CacheEntry {
    BigInt value;
    CacheStatus status = CacheStatus::Exact;
    std::string provenance;
    std::string tool_version;
    std::string timestamp;
};

std::string to_string(CacheStatus s);
CacheStatus cache_status_from_string(const std::string& s);

/// Known values of f(n,w) and f(n,w,k) with provenance.  Merging keeps the
/// strongest knowledge per key: exact beats bounds, a larger lower bound (or
/// smaller upper bound) beats a weaker one, newer timestamps win among equals.
class ExactValueCache {
  public:
    const CacheEntry* find(const CacheKey& key) const;
    /// Inserts under the merge policy; returns true when the entry was kept.
    bool insert(const CacheKey& key, CacheEntry entry);
    void merge(const ExactValueCache& other);
    const std::map<CacheKey, CacheEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

  private:
    std::map<CacheKey, CacheEntry> entries_;
};

/// min over v in [w,n] of floor(C(n,w) F(v,w) / C(v,w)) where F(v,w) is a
/// cached exact/upper value when available, else min(2^v, 2^w C(v,w)).
BigInt upper_monotone(int n, int w, const ExactValueCache& cache);
BigInt upper_monotone(int n, int w);

/// Translate-averaging sandwich from constant-weight data: given per-weight
/// bounds lower_k <= f(n,w,k) <= upper_k, returns
/// (max_k lower_k, min_k floor(upper_k 2^n / C(n,k))).
std::pair<BigInt, BigInt> bassalygo_elias(int n, int w,
                                          const std::map<int, std::pair<BigInt, BigInt>>& cw);

/// Exact f(n,w,k) where the sphere corollary settles it: C(n,k) when
/// k <= w <= floor(n/2); C(n,n-k) when n-k <= w <= floor(n/2).
std::optional<BigInt> cw_exact_corollary(int n, int w, int k);

/// Built-in exact A(n,d,w) values (max constant-weight-w distance-d code).
std::optional<BigInt> known_cw_code_size(int n, int d, int w);

/// h(x) = -x log2 x - (1-x) log2 (1-x), h(0) = h(1) = 0; x in [0,1].
double binary_entropy(double x);

/// lim (1/n) log2 f(n, omega n): h(omega) for omega <= 1/2, else 1.
double asymptotic_exponent(double omega);

struct BoundEntry {
    BigInt value;
    std::string provenance;
};

struct BoundReport {
    int n = 0;
    int w = 0;
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    BigInt best_lower;
    BigInt best_upper;
    std::optional<BigInt> exact;  // from the cache, when known exactly
};

/// All applicable bounds for f(n,w), 0 <= w <= n <= 64; asserts the sandwich.
BoundReport bounds_report(int n, int w, const ExactValueCache& cache);
BoundReport bounds_report(int n, int w);

}  // namespace wit
