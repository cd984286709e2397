#include "wit/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "wit/bounds.hpp"
#include "wit/core.hpp"
#include "wit/detail/combinatorics.hpp"
#include "wit/hitting.hpp"

namespace wit {

namespace {

// Cap on C(n,w) for operations that enumerate every size-w window.  Large
// enough for every instance in this problem domain (C(24,12) included).
constexpr std::uint64_t kWindowEnumLimit = std::uint64_t{1} << 22;

void require_member(const Code& C, const Codeword& c) {
    if (!C.contains(c)) throw std::invalid_argument("codeword is not a member of the code");
}

void require_w(const Code& C, int w) {
    if (w < 0 || w > C.length()) throw std::invalid_argument("w must satisfy 0 <= w <= n");
}

void require_enumerable_windows(int n, int w) {
    if (detail::window_count_capped(n, w, kWindowEnumLimit) > kWindowEnumLimit)
        throw std::domain_error("too many size-w windows to enumerate");
}

std::vector<std::uint64_t> difference_family(const Code& C, std::uint64_t c_bits) {
    std::vector<std::uint64_t> fam;
    fam.reserve(C.size() - 1);
    for (std::uint64_t v : C.word_bits())
        if (v != c_bits) fam.push_back(v ^ c_bits);
    return fam;
}

std::vector<std::uint64_t> pairwise_difference_family(const Code& C) {
    std::vector<std::uint64_t> fam;
    const auto& words = C.word_bits();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) fam.push_back(words[i] ^ words[j]);
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    return fam;
}

}  // namespace

CoordSet min_witness(const Code& C, const Codeword& c, SearchMode mode) {
    require_member(C, c);
    const int n = C.length();
    auto fam = difference_family(C, c.bits());
    std::uint64_t mask = mode == SearchMode::Exact ? lex_min_hitting_set(fam, n).value()
                                                   : greedy_hitting_set(fam, n).value();
    return CoordSet(n, mask);
}

WitnessProfile witness_profile(const Code& C) {
    WitnessProfile out;
    for (std::size_t i = 0; i < C.size(); ++i) {
        Codeword c = C.word(i);
        int size = min_witness(C, c, SearchMode::Exact).size();
        out.sizes.emplace_back(c, size);
        out.parameter = std::max(out.parameter, size);
    }
    return out;
}

CoordSet min_uniform_witness(const Code& C, SearchMode mode) {
    const int n = C.length();
    auto fam = pairwise_difference_family(C);
    std::uint64_t mask = mode == SearchMode::Exact ? lex_min_hitting_set(fam, n).value()
                                                   : greedy_hitting_set(fam, n).value();
    CoordSet W(n, mask);

    const std::size_t m = C.size();
    if (W.size() < 64 && m > (std::uint64_t{1} << W.size()))
        throw std::logic_error("uniform witness smaller than log2 |C|");
    if (mode == SearchMode::Exact && m >= 2 && m <= static_cast<std::size_t>(n) &&
        W.size() > static_cast<int>(m) - 1)
        throw std::logic_error("uniform witness exceeds the |C|-1 guarantee");
    return W;
}

std::vector<CoordSet> witness_sets(const Code& C, const Codeword& c, int w) {
    require_member(C, c);
    require_w(C, w);
    const int n = C.length();
    require_enumerable_windows(n, w);
    const std::uint64_t cb = c.bits();
    std::vector<CoordSet> out;
    detail::for_each_window(n, w, [&](std::uint64_t wm) {
        for (std::uint64_t v : C.word_bits())
            if (v != cb && ((v ^ cb) & wm) == 0) return;
        out.emplace_back(n, wm);
    });
    return out;
}

std::vector<Codeword> witnessed_codewords(const Code& C, const CoordSet& W) {
    if (W.length() != C.length()) throw std::invalid_argument("window length differs from code length");
    const auto& words = C.word_bits();
    const std::size_t m = words.size();
    std::vector<std::pair<std::uint64_t, std::uint32_t>> proj(m);
    for (std::size_t i = 0; i < m; ++i) proj[i] = {words[i] & W.mask(), static_cast<std::uint32_t>(i)};
    std::sort(proj.begin(), proj.end());
    std::vector<Codeword> out;
    for (std::size_t i = 0; i < m;) {
        std::size_t j = i + 1;
        while (j < m && proj[j].first == proj[i].first) ++j;
        if (j == i + 1) out.push_back(C.word(proj[i].second));
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

MeanStats mean_stats(const Code& C, int w) {
    require_w(C, w);
    const int n = C.length();
    require_enumerable_windows(n, w);

    MeanStats stats;
    stats.n = n;
    stats.w = w;

    const auto& words = C.word_bits();
    const std::size_t m = words.size();
    std::vector<std::uint64_t> per_word(m, 0);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> proj(m);

    detail::for_each_window(n, w, [&](std::uint64_t wm) {
        std::uint64_t isolated = 0;
        for (std::size_t i = 0; i < m; ++i) proj[i] = {words[i] & wm, static_cast<std::uint32_t>(i)};
        std::sort(proj.begin(), proj.end());
        for (std::size_t i = 0; i < m;) {
            std::size_t j = i + 1;
            while (j < m && proj[j].first == proj[i].first) ++j;
            if (j == i + 1) {
                ++per_word[proj[i].second];
                ++isolated;
            }
            i = j;
        }
        stats.window_counts.emplace_back(CoordSet(n, wm), isolated);
        stats.total += isolated;
    });

    for (std::size_t i = 0; i < m; ++i) stats.witness_counts.emplace_back(C.word(i), per_word[i]);

    const BigInt windows = binomial(n, w);
    if (m > 0) stats.mean_witness_count = Rational(stats.total, BigInt(m));
    if (windows > 0) stats.gamma = Rational(stats.total, windows);

    // |C| E_c = C(n,w) E_W, exactly.
    if (BigInt(m) * stats.mean_witness_count != windows * stats.gamma)
        throw std::logic_error("double-count identity violated");
    return stats;
}

Rational gamma_mean(const Code& C, int w) {
    require_w(C, w);
    const int n = C.length();
    require_enumerable_windows(n, w);
    const auto& words = C.word_bits();
    const std::size_t m = words.size();
    BigInt total = 0;
    std::vector<std::uint64_t> proj(m);
    detail::for_each_window(n, w, [&](std::uint64_t wm) {
        for (std::size_t i = 0; i < m; ++i) proj[i] = words[i] & wm;
        std::sort(proj.begin(), proj.end());
        for (std::size_t i = 0; i < m;) {
            std::size_t j = i + 1;
            while (j < m && proj[j] == proj[i]) ++j;
            if (j == i + 1) ++total;
            i = j;
        }
    });
    const BigInt windows = binomial(n, w);
    return windows > 0 ? Rational(total, windows) : Rational(0);
}

Code witnessed_subcode(const Code& C, int w) {
    require_w(C, w);
    auto flags = detail::witnessed_flags(C, w);
    std::vector<std::uint64_t> kept;
    for (std::size_t i = 0; i < C.size(); ++i)
        if (flags[i]) kept.push_back(C.word_bits()[i]);
    return Code(C.length(), std::move(kept));
}

GammaPlusResult gamma_plus_exhaustive(int n, int w, GammaRestrict restrict_to) {
    if (n < 1 || n > 4) throw std::domain_error("gamma_plus_exhaustive requires n <= 4");
    if (w < 0 || w > n) throw std::invalid_argument("w must satisfy 0 <= w <= n");

    std::vector<std::uint64_t> windows;
    detail::for_each_window(n, w, [&](std::uint64_t wm) { windows.push_back(wm); });
    const auto window_count = static_cast<std::int64_t>(windows.size());

    const std::uint32_t space = std::uint32_t{1} << n;
    const std::uint64_t code_count = std::uint64_t{1} << space;

    Rational best(-1);
    std::uint64_t best_mask = 0;
    std::uint64_t words[16];
    std::uint64_t proj[16];

    for (std::uint64_t mask = 0; mask < code_count; ++mask) {
        int m = 0;
        for (std::uint32_t v = 0; v < space; ++v)
            if (mask & (std::uint64_t{1} << v)) words[m++] = v;

        std::int64_t total = 0;
        std::uint32_t witnessed = 0;
        for (std::uint64_t wm : windows) {
            for (int i = 0; i < m; ++i) proj[i] = words[i] & wm;
            for (int i = 0; i < m; ++i) {
                bool unique = true;
                for (int j = 0; j < m; ++j)
                    if (j != i && proj[j] == proj[i]) {
                        unique = false;
                        break;
                    }
                if (unique) {
                    ++total;
                    witnessed |= std::uint32_t{1} << i;
                }
            }
        }
        if (restrict_to == GammaRestrict::WitnessCodes &&
            witnessed != (m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1))
            continue;
        Rational gamma = window_count > 0 ? Rational(total, window_count) : Rational(0);
        if (gamma > best) {
            best = gamma;
            best_mask = mask;
        }
    }

    std::vector<std::uint64_t> code_words;
    for (std::uint32_t v = 0; v < space; ++v)
        if (best_mask & (std::uint64_t{1} << v)) code_words.push_back(v);
    return GammaPlusResult{best, Code(n, std::move(code_words))};
}

}  // namespace wit
