#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "wit/hitting.hpp"
#include "wit/types.hpp"

using namespace wit;

namespace {

std::mt19937_64 rng(777);

std::uint64_t draw_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

bool hits_all(std::uint64_t set, const std::vector<std::uint64_t>& family) {
    for (std::uint64_t s : family)
        if ((s & set) == 0) return false;
    return true;
}

// Oracle: smallest hitting set by brute force over all subsets of [n].
int brute_min_size(const std::vector<std::uint64_t>& family, int n) {
    const std::uint64_t space = std::uint64_t{1} << n;
    int best = n + 1;
    for (std::uint64_t mask = 0; mask < space; ++mask)
        if (hits_all(mask, family)) best = std::min(best, std::popcount(mask));
    return best;
}

// Oracle: lexicographically smallest minimum hitting set, by scanning all
// subsets in member-lex order within the optimal cardinality.
std::uint64_t brute_lex_min(const std::vector<std::uint64_t>& family, int n) {
    const int target = brute_min_size(family, n);
    std::uint64_t best = 0;
    std::vector<int> best_members;
    bool have = false;
    const std::uint64_t space = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < space; ++mask) {
        if (std::popcount(mask) != target || !hits_all(mask, family)) continue;
        std::vector<int> members = CoordSet(n, mask).members();
        if (!have || members < best_members) {
            best = mask;
            best_members = members;
            have = true;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("empty family needs nothing") {
    std::vector<std::uint64_t> fam;
    auto r = min_hitting_set(fam, detail::full_mask(6));
    REQUIRE(r.has_value());
    CHECK(r->size == 0);
    CHECK(lex_min_hitting_set(fam, 6) == std::uint64_t{0});
    CHECK(greedy_hitting_set(fam, 6) == std::uint64_t{0});
}

TEST_CASE("unhittable family") {
    std::vector<std::uint64_t> fam{0b101, 0};
    CHECK(!min_hitting_set(fam, detail::full_mask(3)).has_value());
    CHECK(!greedy_hitting_set(fam, 3).has_value());
    CHECK(!hitting_set_within(fam, detail::full_mask(3), 3).has_value());
}

TEST_CASE("known instance") {
    // difference sets of 000 inside {000, 011, 101, 110}
    const int n = 3;
    std::vector<std::uint64_t> fam{
        CoordSet::of(n, {2, 3}).mask(),
        CoordSet::of(n, {1, 3}).mask(),
        CoordSet::of(n, {1, 2}).mask(),
    };
    auto r = min_hitting_set(fam, detail::full_mask(n));
    REQUIRE(r.has_value());
    CHECK(r->size == 2);
    CHECK(lex_min_hitting_set(fam, n) == CoordSet::of(n, {1, 2}).mask());
}

TEST_CASE("budget cutoff") {
    std::vector<std::uint64_t> fam{0b100, 0b010, 0b001};
    CHECK(!hitting_set_within(fam, detail::full_mask(3), 2).has_value());
    auto r = hitting_set_within(fam, detail::full_mask(3), 3);
    REQUIRE(r.has_value());
    CHECK(*r == 0b111);
}

TEST_CASE("universe restriction") {
    std::vector<std::uint64_t> fam{0b110, 0b011};
    // only the middle coordinate allowed: hits both
    auto r = min_hitting_set(fam, 0b010);
    REQUIRE(r.has_value());
    CHECK(r->size == 1);
    CHECK(r->set == 0b010);
    // only the outer coordinates allowed: need both
    auto r2 = min_hitting_set(fam, 0b101);
    REQUIRE(r2.has_value());
    CHECK(r2->size == 2);
}

TEST_CASE("matches brute force on random families") {
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(draw_below(6));  // 3..8
        const int count = 1 + static_cast<int>(draw_below(10));
        std::vector<std::uint64_t> fam;
        for (int i = 0; i < count; ++i) {
            std::uint64_t s = draw_below(std::uint64_t{1} << n);
            if (s == 0) s = 1;
            fam.push_back(s);
        }
        const int expected = brute_min_size(fam, n);

        auto r = min_hitting_set(fam, detail::full_mask(n));
        REQUIRE(r.has_value());
        CHECK(r->size == expected);
        CHECK(hits_all(r->set, fam));

        auto lex = lex_min_hitting_set(fam, n);
        REQUIRE(lex.has_value());
        CHECK(std::popcount(*lex) == expected);
        CHECK(*lex == brute_lex_min(fam, n));

        auto greedy = greedy_hitting_set(fam, n);
        REQUIRE(greedy.has_value());
        CHECK(hits_all(*greedy, fam));
        CHECK(std::popcount(*greedy) >= expected);
    }
}
