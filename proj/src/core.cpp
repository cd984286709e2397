#include "wit/core.hpp"

#include <algorithm>
#include <bit>

#include "wit/detail/combinatorics.hpp"
#include "wit/hitting.hpp"

namespace wit {

namespace {

// Window sweeps are preferred whenever the number of size-w windows is small;
// beyond this, per-word hitting-set searches take over.
constexpr std::uint64_t kSweepWindowLimit = std::uint64_t{1} << 20;

void require_member(const Code& C, const Codeword& c) {
    if (!C.contains(c)) throw std::invalid_argument("codeword is not a member of the code");
}

std::vector<std::uint64_t> difference_family(const Code& C, std::uint64_t c_bits) {
    std::vector<std::uint64_t> fam;
    fam.reserve(C.size() - 1);
    for (std::uint64_t v : C.word_bits())
        if (v != c_bits) fam.push_back(v ^ c_bits);
    return fam;
}

}  // namespace

CoordSet support(const Codeword& c) { return CoordSet(c.length(), c.bits()); }

CoordSet difference_support(const Codeword& c, const Codeword& d) {
    if (c.length() != d.length()) throw std::invalid_argument("codewords of different length");
    return CoordSet(c.length(), c.bits() ^ d.bits());
}

bool is_witness(const Code& C, const Codeword& c, const CoordSet& W) {
    require_member(C, c);
    if (W.length() != C.length()) throw std::invalid_argument("window length differs from code length");
    const std::uint64_t cb = c.bits();
    const std::uint64_t wm = W.mask();
    for (std::uint64_t v : C.word_bits())
        if (v != cb && ((v ^ cb) & wm) == 0) return false;
    return true;
}

namespace detail {

std::vector<bool> witnessed_flags(const Code& C, int w) {
    const int n = C.length();
    const std::size_t m = C.size();
    std::vector<bool> flags(m, false);
    if (m == 0) return flags;
    if (m == 1) {
        flags[0] = true;  // the empty window already isolates a lone word
        return flags;
    }
    if (w > n) w = n;

    if (window_count_capped(n, w, kSweepWindowLimit) <= kSweepWindowLimit) {
        // One pass over all size-w windows; a word is witnessed by W iff its
        // projection (masked value) is unique.
        const auto& words = C.word_bits();
        std::vector<std::pair<std::uint64_t, std::uint32_t>> proj(m);
        for_each_window(n, w, [&](std::uint64_t wm) {
            for (std::size_t i = 0; i < m; ++i) proj[i] = {words[i] & wm, static_cast<std::uint32_t>(i)};
            std::sort(proj.begin(), proj.end());
            for (std::size_t i = 0; i < m;) {
                std::size_t j = i + 1;
                while (j < m && proj[j].first == proj[i].first) ++j;
                if (j == i + 1) flags[proj[i].second] = true;
                i = j;
            }
        });
        return flags;
    }

    const std::uint64_t universe = full_mask(n);
    for (std::size_t i = 0; i < m; ++i) {
        auto fam = difference_family(C, C.word_bits()[i]);
        flags[i] = hitting_set_within(fam, universe, w).has_value();
    }
    return flags;
}

}  // namespace detail

WitnessAssignment has_w_witness_property(const Code& C, int w) {
    const int n = C.length();
    if (w < 0 || w > n) throw std::invalid_argument("w must satisfy 0 <= w <= n");

    WitnessAssignment out;
    auto flags = detail::witnessed_flags(C, w);
    for (std::size_t i = 0; i < C.size(); ++i) {
        if (!flags[i]) {
            out.holds = false;
            out.first_failure = C.word(i);
            return out;
        }
    }
    out.holds = true;

    for (std::size_t i = 0; i < C.size(); ++i) {
        auto fam = difference_family(C, C.word_bits()[i]);
        std::uint64_t witness = lex_min_hitting_set(fam, n).value();
        // Pad to size exactly w with the smallest coordinates not yet used.
        for (int j = 1; j <= n && std::popcount(witness) < w; ++j) {
            std::uint64_t bit = detail::coord_bit(n, j);
            if (!(witness & bit)) witness |= bit;
        }
        out.choice.emplace_back(C.word(i), CoordSet(n, witness));
    }
    return out;
}

Codeword translate(const Codeword& c, const Codeword& x) {
    if (c.length() != x.length()) throw std::invalid_argument("codewords of different length");
    return Codeword(c.length(), c.bits() ^ x.bits());
}

Code translate(const Code& C, const Codeword& x) {
    if (C.length() != x.length()) throw std::invalid_argument("translation word length differs from code length");
    std::vector<std::uint64_t> ws;
    ws.reserve(C.size());
    for (std::uint64_t v : C.word_bits()) ws.push_back(v ^ x.bits());
    return Code(C.length(), std::move(ws));
}

namespace {

std::uint64_t permute_bits(int n, std::uint64_t bits, const Permutation& sigma) {
    std::uint64_t out = 0;
    for (int j = 1; j <= n; ++j)
        if (bits & detail::coord_bit(n, j))
            out |= detail::coord_bit(n, sigma[static_cast<std::size_t>(j - 1)]);
    return out;
}

}  // namespace

Codeword permute(const Codeword& c, const Permutation& sigma) {
    check_permutation(c.length(), sigma);
    return Codeword(c.length(), permute_bits(c.length(), c.bits(), sigma));
}

CoordSet permute(const CoordSet& S, const Permutation& sigma) {
    check_permutation(S.length(), sigma);
    return CoordSet(S.length(), permute_bits(S.length(), S.mask(), sigma));
}

Code permute(const Code& C, const Permutation& sigma) {
    check_permutation(C.length(), sigma);
    std::vector<std::uint64_t> ws;
    ws.reserve(C.size());
    for (std::uint64_t v : C.word_bits()) ws.push_back(permute_bits(C.length(), v, sigma));
    return Code(C.length(), std::move(ws));
}

Codeword complement(const Codeword& c) {
    return Codeword(c.length(), c.bits() ^ detail::full_mask(c.length()));
}

Code complement(const Code& C) {
    const std::uint64_t full = detail::full_mask(C.length());
    std::vector<std::uint64_t> ws;
    ws.reserve(C.size());
    for (std::uint64_t v : C.word_bits()) ws.push_back(v ^ full);
    return Code(C.length(), std::move(ws));
}

}  // namespace wit
