#include "wit/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace wit {

namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

BigInt floor_div(const BigInt& a, const BigInt& b) { return a / b; }  // both nonnegative here

}  // namespace

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("binomial requires 0 <= k <= n");
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

BigInt ball_size(int w, int r) {
    if (w < 0 || r < 0 || r > w) throw std::domain_error("ball_size requires 0 <= r <= w");
    BigInt acc = 0;
    for (int i = 0; i <= r; ++i) acc += binomial(w, i);
    return acc;
}

BigInt lower_sphere(int n, int w) { return binomial(n, w); }

std::optional<BigInt> known_cw_code_size(int n, int d, int w) {
    if (n == 4 && d == 4 && w == 2) return BigInt(2);
    if (n == 8 && d == 4 && w == 4) return BigInt(14);
    if (n == 12 && d == 4 && w == 6) return BigInt(132);
    return std::nullopt;
}

Provenanced lower_best_construction(int n, int w) {
    if (n < 0 || w < 0 || w > n) throw std::domain_error("require 0 <= w <= n");
    Provenanced best{lower_sphere(n, w), "sphere"};
    auto consider = [&best](BigInt v, std::string tag) {
        if (v > best.value) best = {std::move(v), std::move(tag)};
    };

    if (w >= n / 2) consider(binomial(n, n / 2), "half-sphere");
    consider(pow2(w), "cube");
    if (auto a = known_cw_code_size(n, 4, w))
        consider(*a * ball_size(w, 1), "steiner-family(d=4)");
    if (2 * w > n) {
        for (int t = 1; t <= n - w; ++t) {
            BigInt v = pow2(w) + binomial(w, w - t) * (binomial(n - w, t) - 1);
            consider(std::move(v), "two-part(t=" + std::to_string(t) + ")");
        }
    }
    return best;
}

BigInt upper_simple(int n, int w) {
    if (n < 0 || w < 0 || w > n) throw std::domain_error("require 0 <= w <= n");
    BigInt v = pow2(w) * binomial(n, w);
    BigInt cap = pow2(n);
    return v < cap ? v : cap;
}

BigInt upper_improved(int n, int w) {
    if (w < 1 || 2 * w > n) throw std::domain_error("upper_improved requires 1 <= w <= n/2");
    // floor(2 sqrt(w) C(n,w)) = isqrt(4 w C(n,w)^2), exactly.
    BigInt c = binomial(n, w);
    BigInt v = boost::multiprecision::sqrt(BigInt(4) * w * c * c);
    BigInt cap = pow2(n);
    return v < cap ? v : cap;
}

std::string to_string(CacheStatus s) {
    switch (s) {
        case CacheStatus::Exact: return "exact";
        case CacheStatus::LowerBound: return "lower-bound";
        case CacheStatus::UpperBound: return "upper-bound";
    }
    throw std::logic_error("bad cache status");
}

CacheStatus cache_status_from_string(const std::string& s) {
    if (s == "exact") return CacheStatus::Exact;
    if (s == "lower-bound") return CacheStatus::LowerBound;
    if (s == "upper-bound") return CacheStatus::UpperBound;
    throw std::invalid_argument("unknown cache status: " + s);
}

const CacheEntry* ExactValueCache::find(const CacheKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

bool ExactValueCache::insert(const CacheKey& key, CacheEntry entry) {
    if (entry.value <= 0) throw std::invalid_argument("cache values must be positive");
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, std::move(entry));
        return true;
    }
    CacheEntry& have = it->second;
    bool take;
    if ((entry.status == CacheStatus::Exact) != (have.status == CacheStatus::Exact)) {
        take = entry.status == CacheStatus::Exact;
    } else if (entry.status == have.status) {
        if (entry.value != have.value) {
            if (entry.status == CacheStatus::Exact)
                throw std::logic_error("conflicting exact cache values for one key");
            take = entry.status == CacheStatus::LowerBound ? entry.value > have.value
                                                           : entry.value < have.value;
        } else {
            take = entry.timestamp > have.timestamp;
        }
    } else {
        // lower vs upper bound for the same key: keep the newer record.
        take = entry.timestamp > have.timestamp;
    }
    if (take) have = std::move(entry);
    return take;
}

void ExactValueCache::merge(const ExactValueCache& other) {
    for (const auto& [key, entry] : other.entries()) insert(key, entry);
}

BigInt upper_monotone(int n, int w, const ExactValueCache& cache) {
    if (n < 0 || w < 0 || w > n) throw std::domain_error("require 0 <= w <= n");
    const BigInt cnw = binomial(n, w);
    std::optional<BigInt> best;
    for (int v = w; v <= n; ++v) {
        BigInt f_v;
        const CacheEntry* hit = cache.find(CacheKey{v, w, std::nullopt});
        if (hit && hit->status != CacheStatus::LowerBound) {
            f_v = hit->value;
        } else {
            BigInt a = pow2(v);
            BigInt b = pow2(w) * binomial(v, w);
            f_v = a < b ? a : b;
        }
        BigInt term = floor_div(cnw * f_v, binomial(v, w));
        if (!best || term < *best) best = std::move(term);
    }
    return *best;
}

BigInt upper_monotone(int n, int w) { return upper_monotone(n, w, ExactValueCache{}); }

std::pair<BigInt, BigInt> bassalygo_elias(int n, int w,
                                          const std::map<int, std::pair<BigInt, BigInt>>& cw) {
    if (cw.empty()) throw std::invalid_argument("bassalygo_elias requires at least one weight entry");
    (void)w;
    std::optional<BigInt> lo, hi;
    for (const auto& [k, bounds] : cw) {
        if (k < 0 || k > n) throw std::domain_error("weight entry out of range");
        if (!lo || bounds.first > *lo) lo = bounds.first;
        BigInt term = floor_div(bounds.second * pow2(n), binomial(n, k));
        if (!hi || term < *hi) hi = std::move(term);
    }
    return {*lo, *hi};
}

std::optional<BigInt> cw_exact_corollary(int n, int w, int k) {
    if (n < 0 || w < 0 || w > n || k < 0 || k > n) throw std::domain_error("require 0 <= w,k <= n");
    if (k <= w && w <= n / 2) return binomial(n, k);
    if (n - k <= w && w <= n / 2) return binomial(n, n - k);
    return std::nullopt;
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary_entropy requires x in [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double asymptotic_exponent(double omega) {
    if (!(omega >= 0.0 && omega <= 1.0)) throw std::domain_error("asymptotic_exponent requires omega in [0,1]");
    return omega <= 0.5 ? binary_entropy(omega) : 1.0;
}

BoundReport bounds_report(int n, int w, const ExactValueCache& cache) {
    if (n < 0 || n > 64 || w < 0 || w > n) throw std::domain_error("require 0 <= w <= n <= 64");
    BoundReport report;
    report.n = n;
    report.w = w;

    report.lower.push_back({lower_sphere(n, w), "sphere"});
    Provenanced constr = lower_best_construction(n, w);
    report.lower.push_back({constr.value, "construction:" + constr.provenance});
    if (w <= n / 2) {
        // Constant-weight corollary feeding the translate-averaging lower bound.
        std::map<int, std::pair<BigInt, BigInt>> cw;
        for (int k = 0; k <= n; ++k)
            if (auto v = cw_exact_corollary(n, w, k)) cw.emplace(k, std::make_pair(*v, *v));
        if (!cw.empty()) report.lower.push_back({bassalygo_elias(n, w, cw).first, "bassalygo-elias"});
    }

    report.upper.push_back({upper_simple(n, w), "pigeonhole"});
    if (w >= 1 && 2 * w <= n) report.upper.push_back({upper_improved(n, w), "sqrt-refinement"});
    report.upper.push_back({upper_monotone(n, w, cache), "monotone-combiner"});
    report.upper.push_back({BigInt(1) << n, "whole-space"});

    if (const CacheEntry* hit = cache.find(CacheKey{n, w, std::nullopt})) {
        if (hit->status == CacheStatus::Exact)
            report.exact = hit->value;
        else if (hit->status == CacheStatus::LowerBound)
            report.lower.push_back({hit->value, "cache:" + hit->provenance});
        else
            report.upper.push_back({hit->value, "cache:" + hit->provenance});
    }

    report.best_lower = report.lower.front().value;
    for (const auto& e : report.lower) report.best_lower = std::max(report.best_lower, e.value);
    report.best_upper = report.upper.front().value;
    for (const auto& e : report.upper) report.best_upper = std::min(report.best_upper, e.value);

    if (report.best_lower > report.best_upper)
        throw std::logic_error("bound sandwich violated: lower > upper");
    if (report.exact && (*report.exact < report.best_lower || *report.exact > report.best_upper))
        throw std::logic_error("cached exact value outside the bound sandwich");
    return report;
}

BoundReport bounds_report(int n, int w) { return bounds_report(n, w, ExactValueCache{}); }

}  // namespace wit
