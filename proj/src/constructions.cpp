#include "wit/constructions.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "wit/bounds.hpp"
#include "wit/core.hpp"
#include "wit/detail/combinatorics.hpp"

namespace wit {

namespace {

// Deterministic bounded uniform draw (std::uniform_int_distribution is
// implementation-defined; rejection sampling on the raw engine is not).
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = engine();
        } while (x >= limit);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }
};

std::vector<CoordSet> masks_to_blocks(int n, std::vector<std::uint64_t> masks) {
    std::vector<CoordSet> blocks;
    blocks.reserve(masks.size());
    for (std::uint64_t m : masks) blocks.emplace_back(n, m);
    return blocks;
}

// Member-lexicographic block order = descending mask order for equal weight.
void sort_blocks_lex(std::vector<std::uint64_t>& masks) {
    std::sort(masks.begin(), masks.end(), std::greater<>());
}

}  // namespace

DesignCheck check_design(const SetFamily& family, int t) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    DesignCheck out;
    out.t = t;
    out.v = family.length();

    const auto& blocks = family.blocks();
    out.k = blocks.empty() ? -1 : blocks.front().size();
    for (const CoordSet& b : blocks)
        if (b.size() != out.k) out.k = -1;

    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            out.max_pair_intersection = std::max(
                out.max_pair_intersection, std::popcount(blocks[i].mask() & blocks[j].mask()));

    if (out.k < t) {
        out.is_steiner = false;
        return out;
    }
    std::unordered_map<std::uint64_t, int> coverage;
    for (const CoordSet& b : blocks) {
        std::vector<int> mem = b.members();
        detail::for_each_window(out.k, t, [&](std::uint64_t sub) {
            // Map the t-subset of the block's own coordinates back to [v].
            std::uint64_t mask = 0;
            for (int p = 1; p <= out.k; ++p)
                if (sub & detail::coord_bit(out.k, p))
                    mask |= detail::coord_bit(out.v, mem[static_cast<std::size_t>(p - 1)]);
            ++coverage[mask];
        });
    }
    BigInt expected = binomial(out.v, t);
    bool all_once = std::all_of(coverage.begin(), coverage.end(),
                                [](const auto& kv) { return kv.second == 1; });
    out.is_steiner = all_once && BigInt(coverage.size()) == expected;
    return out;
}

Code sphere(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("sphere requires 0 <= k <= n");
    std::vector<std::uint64_t> words;
    detail::for_each_window(n, k, [&](std::uint64_t m) { words.push_back(m); });
    return Code(n, std::move(words));
}

Code cube_on_window(int n, const CoordSet& W) {
    if (W.length() != n) throw std::invalid_argument("window length differs from n");
    std::vector<std::uint64_t> words;
    std::uint64_t sub = W.mask();
    while (true) {
        words.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & W.mask();
    }
    return Code(n, std::move(words));
}

Code from_family(const SetFamily& family) {
    // Count, for every word supported inside some block, how many blocks
    // contain its support; keep the words counted exactly once.
    std::unordered_map<std::uint64_t, int> containing;
    for (const CoordSet& b : family.blocks()) {
        std::uint64_t sub = b.mask();
        while (true) {
            ++containing[sub];
            if (sub == 0) break;
            sub = (sub - 1) & b.mask();
        }
    }
    std::vector<std::uint64_t> words;
    for (const auto& [word, count] : containing)
        if (count == 1) words.push_back(word);
    return Code(family.length(), std::move(words));
}

namespace {

// Extended [8,4] binary Hamming code generator rows.
constexpr std::uint64_t kHamming8Rows[4] = {0b10001101, 0b01001011, 0b00100111, 0b00011110};

// Extended ternary Golay [12,6]: G = [I6 | B] over GF(3).
constexpr int kGolayB[6][6] = {
    {0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 2},
    {1, 2, 1, 0, 1, 2}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0},
};

}  // namespace

SetFamily steiner_3_4_8() {
    std::vector<std::uint64_t> supports;
    for (std::uint32_t m = 0; m < 16; ++m) {
        std::uint64_t word = 0;
        for (int i = 0; i < 4; ++i)
            if (m & (1u << i)) word ^= kHamming8Rows[i];
        if (std::popcount(word) == 4) supports.push_back(word);
    }
    sort_blocks_lex(supports);
    return SetFamily(8, masks_to_blocks(8, std::move(supports)));
}

SetFamily steiner_5_6_12() {
    std::set<std::uint64_t> supports;
    int msg[6];
    for (int code = 0; code < 729; ++code) {
        int x = code;
        for (int i = 0; i < 6; ++i) {
            msg[i] = x % 3;
            x /= 3;
        }
        int weight = 0;
        std::uint64_t support = 0;
        for (int j = 0; j < 6; ++j) {
            if (msg[j] != 0) {
                ++weight;
                support |= detail::coord_bit(12, j + 1);
            }
        }
        for (int j = 0; j < 6; ++j) {
            int digit = 0;
            for (int i = 0; i < 6; ++i) digit += msg[i] * kGolayB[i][j];
            if (digit % 3 != 0) {
                ++weight;
                support |= detail::coord_bit(12, 7 + j);
            }
        }
        if (weight == 6) supports.insert(support);
    }
    std::vector<std::uint64_t> masks(supports.begin(), supports.end());
    sort_blocks_lex(masks);
    return SetFamily(12, masks_to_blocks(12, std::move(masks)));
}

BigInt steiner_family_code_size(const BigInt& A, int w, int d) {
    if (d < 2 || d % 2 != 0) throw std::domain_error("d must be even and >= 2");
    return A * ball_size(w, d / 2 - 1);
}

SetFamily cw_code_search(int n, int d, int w, int effort, std::uint64_t seed) {
    if (d < 2 || d % 2 != 0) throw std::domain_error("d must be even and >= 2");
    if (w < 0 || w > n) throw std::domain_error("require 0 <= w <= n");
    if (effort < 1) throw std::invalid_argument("effort must be positive");

    std::vector<std::uint64_t> candidates;
    detail::for_each_window(n, w, [&](std::uint64_t m) { candidates.push_back(m); });
    if (d == 2 || candidates.size() <= 1) {
        sort_blocks_lex(candidates);
        return SetFamily(n, masks_to_blocks(n, std::move(candidates)));
    }

    const int cap = w - d / 2;  // max allowed pairwise intersection
    auto compatible = [cap](std::uint64_t a, const std::vector<std::uint64_t>& fam) {
        for (std::uint64_t b : fam)
            if (std::popcount(a & b) > cap) return false;
        return true;
    };

    Rng rng(seed);
    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> order = candidates;
    for (int restart = 0; restart < effort; ++restart) {
        rng.shuffle(order);
        std::vector<std::uint64_t> fam;
        for (std::uint64_t c : order)
            if (compatible(c, fam)) fam.push_back(c);

        // Force-insert plateau moves: swap one conflicting member for a new
        // candidate, then re-fill greedily.
        const int passes = 50 * n;
        for (int iter = 0; iter < passes; ++iter) {
            std::uint64_t c = candidates[rng.below(candidates.size())];
            if (std::find(fam.begin(), fam.end(), c) != fam.end()) continue;
            std::vector<std::uint64_t> conflicts;
            for (std::uint64_t b : fam)
                if (std::popcount(c & b) > cap) conflicts.push_back(b);
            if (conflicts.empty()) {
                fam.push_back(c);
            } else if (conflicts.size() == 1) {
                std::erase(fam, conflicts.front());
                fam.push_back(c);
                rng.shuffle(order);
                for (std::uint64_t c2 : order)
                    if (std::find(fam.begin(), fam.end(), c2) == fam.end() && compatible(c2, fam))
                        fam.push_back(c2);
            }
        }
        if (fam.size() > best.size()) best = fam;
    }
    sort_blocks_lex(best);
    return SetFamily(n, masks_to_blocks(n, std::move(best)));
}

Code two_part(int n, int w, const Code& D) {
    if (2 * w <= n || w > n) throw std::invalid_argument("two_part requires n/2 < w <= n");
    if (D.length() != w) throw std::invalid_argument("seed code D must have length w");
    for (std::uint64_t d : D.word_bits())
        if (std::popcount(d) < 2 * w - n)
            throw std::invalid_argument("seed code D has a word of weight below 2w - n");

    const int shift = n - w;  // first-w coordinates sit above the tail bits
    std::vector<std::uint64_t> words;

    const std::uint64_t space = std::uint64_t{1} << w;
    const auto& d_words = D.word_bits();
    for (std::uint64_t v = 0; v < space; ++v)
        if (!std::binary_search(d_words.begin(), d_words.end(), v))
            words.push_back(v << shift);

    for (std::uint64_t d : d_words) {
        const int missing = w - std::popcount(d);
        detail::for_each_window(shift == 0 ? 1 : shift, missing, [&](std::uint64_t tail) {
            words.push_back((d << shift) | tail);
        });
    }

    Code C(n, std::move(words));
    if (BigInt(C.size()) > (BigInt(1) << w) + binomial(n, w))
        throw std::logic_error("two_part exceeded the 2^w + C(n,w) cap");
    return C;
}

bool two_part_t_in_stated_range(int n, int w, int t) { return t >= 1 && 2 * t <= n - w; }

Code two_part_sphere(int n, int w, int t) {
    if (2 * w <= n || w > n) throw std::invalid_argument("two_part_sphere requires n/2 < w <= n");
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (w - t < 2 * w - n)
        throw std::invalid_argument("t violates the minimum-weight condition w - t >= 2w - n");
    Code D = sphere(w, w - t);
    Code C = two_part(n, w, D);

    BigInt expected = (BigInt(1) << w) + binomial(w, w - t) * (binomial(n - w, t) - 1);
    if (BigInt(C.size()) != expected)
        throw std::logic_error("two_part_sphere size disagrees with the closed form");
    return C;
}

SphereSignature sphere_translate_signature(const Code& C, int w) {
    const int n = C.length();
    if (n > 24) throw std::domain_error("sphere_translate_signature requires n <= 24");
    if (w < 0 || w > n) throw std::invalid_argument("w must satisfy 0 <= w <= n");

    SphereSignature sig;

    const int radius = n / 2;
    if (BigInt(C.size()) == binomial(n, radius) && !C.empty()) {
        // If C = S_radius(x) then x differs from any fixed word in exactly
        // `radius` positions, so only C(n,radius) centers need testing.
        const std::uint64_t c0 = C.word_bits().front();
        detail::for_each_window(n, radius, [&](std::uint64_t s) {
            if (sig.is_sphere_translate) return;
            const std::uint64_t x = c0 ^ s;
            for (std::uint64_t v : C.word_bits())
                if (std::popcount(v ^ x) != radius) return;
            sig.is_sphere_translate = true;
        });
    }

    const auto& words = C.word_bits();
    const std::size_t m = words.size();
    std::vector<std::uint64_t> proj(m);
    detail::for_each_window(n, w, [&](std::uint64_t wm) {
        for (std::size_t i = 0; i < m; ++i) proj[i] = words[i] & wm;
        std::sort(proj.begin(), proj.end());
        std::uint64_t isolated = 0;
        for (std::size_t i = 0; i < m;) {
            std::size_t j = i + 1;
            while (j < m && proj[j] == proj[i]) ++j;
            if (j == i + 1) ++isolated;
            i = j;
        }
        ++sig.window_count_histogram[isolated];
    });
    return sig;
}

}  // namespace wit
