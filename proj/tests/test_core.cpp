#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wit/core.hpp"
#include "wit/types.hpp"

using namespace wit;

namespace {

// Deterministic engine; raw 64-bit draws only.
std::mt19937_64 rng(12345);

std::uint64_t draw_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Code random_code(int n, std::size_t max_size) {
    std::vector<std::uint64_t> words;
    const std::uint64_t space = std::uint64_t{1} << n;
    const std::uint64_t size = draw_below(std::min<std::uint64_t>(max_size, space) + 1);
    for (std::uint64_t i = 0; i < size; ++i) words.push_back(draw_below(space));
    return Code(n, std::move(words));  // dedupes
}

Permutation random_permutation(int n) {
    Permutation sigma(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) sigma[static_cast<std::size_t>(j)] = j + 1;
    for (std::size_t i = sigma.size(); i > 1; --i) std::swap(sigma[i - 1], sigma[draw_below(i)]);
    return sigma;
}

}  // namespace

TEST_CASE("codeword parsing and string round-trip") {
    Codeword c = Codeword::parse("1100");
    CHECK(c.length() == 4);
    CHECK(c.weight() == 2);
    CHECK(c.bit(1));
    CHECK(c.bit(2));
    CHECK(!c.bit(3));
    CHECK(c.str() == "1100");
    CHECK(Codeword::parse("0000").weight() == 0);
    CHECK_THROWS_AS(Codeword::parse("10a1"), std::invalid_argument);
    CHECK_THROWS_AS((Codeword{4, 0xFF}), std::invalid_argument);
}

TEST_CASE("word order equals bitstring order") {
    // Sorted words of a Code must come out in bitstring-lexicographic order.
    Code c = Code::of(4, {"1100", "0011", "1010", "0101"});
    REQUIRE(c.size() == 4);
    CHECK(c.word(0).str() == "0011");
    CHECK(c.word(1).str() == "0101");
    CHECK(c.word(2).str() == "1010");
    CHECK(c.word(3).str() == "1100");
}

TEST_CASE("coordset members and lexicographic comparison") {
    CoordSet s = CoordSet::of(4, {2, 4});
    CHECK(s.size() == 2);
    CHECK(s.members() == std::vector<int>{2, 4});
    CHECK(s.str() == "{2,4}");
    CHECK(CoordSet::lex_less(CoordSet::of(4, {1, 4}), CoordSet::of(4, {2, 3})));
    CHECK(CoordSet::lex_less(CoordSet::of(4, {1}), CoordSet::of(4, {1, 2})));
    CHECK(!CoordSet::lex_less(CoordSet::of(4, {2, 3}), CoordSet::of(4, {1, 4})));
}

TEST_CASE("support") {
    CHECK(support(Codeword::parse("1100")) == CoordSet::of(4, {1, 2}));
    CHECK(support(Codeword::parse("0000")) == CoordSet::empty(4));
    CHECK(support(Codeword::parse("0101")) == CoordSet::of(4, {2, 4}));
}

TEST_CASE("difference_support") {
    CHECK(difference_support(Codeword::parse("1100"), Codeword::parse("1010")) ==
          CoordSet::of(4, {2, 3}));
    Codeword c = Codeword::parse("0110");
    CHECK(difference_support(c, c).is_empty());
    CHECK(difference_support(Codeword::parse("0000"), Codeword::parse("1111")) ==
          CoordSet::full(4));
    CHECK_THROWS_AS(difference_support(Codeword::parse("01"), Codeword::parse("011")),
                    std::invalid_argument);
}

TEST_CASE("is_witness basics") {
    Code weight1 = Code::of(3, {"100", "010", "001"});
    CHECK(is_witness(weight1, Codeword::parse("100"), CoordSet::of(3, {1})));

    Code with_zero = Code::of(3, {"100", "010", "001", "000"});
    Codeword zero = Codeword::parse("000");
    for (int a = 1; a <= 3; ++a) {
        CHECK(!is_witness(with_zero, zero, CoordSet::of(3, {a})));
        for (int b = a + 1; b <= 3; ++b) CHECK(!is_witness(with_zero, zero, CoordSet::of(3, {a, b})));
    }
    CHECK(is_witness(with_zero, zero, CoordSet::full(3)));

    Code lone = Code::of(3, {"101"});
    CHECK(is_witness(lone, Codeword::parse("101"), CoordSet::empty(3)));

    CHECK_THROWS_AS(is_witness(weight1, Codeword::parse("111"), CoordSet::full(3)),
                    std::invalid_argument);
}

TEST_CASE("has_w_witness_property on the reference codes") {
    // All weight-2 words of length 4: supports witness everything at w=2.
    Code s42 = Code(4, [] {
        std::vector<Codeword> ws;
        for (std::uint64_t v = 0; v < 16; ++v)
            if (std::popcount(v) == 2) ws.emplace_back(4, v);
        return ws;
    }());
    auto check = has_w_witness_property(s42, 2);
    CHECK(check.holds);
    REQUIRE(check.choice.size() == 6);
    for (const auto& [word, witness] : check.choice) {
        CHECK(witness.size() == 2);
        CHECK(is_witness(s42, word, witness));
    }
    // 1100's lexicographically-smallest minimum witness is its own support.
    CHECK(check.choice.back().first.str() == "1100");
    CHECK(check.choice.back().second == CoordSet::of(4, {1, 2}));

    Code with_zero = Code::of(3, {"100", "010", "001", "000"});
    auto fail = has_w_witness_property(with_zero, 2);
    CHECK(!fail.holds);
    REQUIRE(fail.first_failure.has_value());
    CHECK(fail.first_failure->str() == "000");

    Code cube = Code(3, std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(has_w_witness_property(cube, 3).holds);
}

TEST_CASE("witness property is monotone in w") {
    for (int trial = 0; trial < 30; ++trial) {
        Code c = random_code(5, 12);
        int first_true = -1;
        for (int w = 0; w <= 5; ++w) {
            bool holds = has_w_witness_property(c, w).holds;
            if (holds && first_true < 0) first_true = w;
            if (first_true >= 0) CHECK(holds == (w >= first_true));
        }
        CHECK(first_true >= 0);  // w = n always holds
    }
}

TEST_CASE("choice map pads to exactly min(w, n)") {
    Code lone = Code::of(4, {"0110"});
    auto check = has_w_witness_property(lone, 3);
    REQUIRE(check.holds);
    REQUIRE(check.choice.size() == 1);
    CHECK(check.choice[0].second.size() == 3);
    CHECK(check.choice[0].second == CoordSet::of(4, {1, 2, 3}));

    CHECK(has_w_witness_property(lone, 0).holds);
    CHECK(has_w_witness_property(Code(4), 0).holds);
}

TEST_CASE("translate, permute, complement") {
    Code c = Code::of(3, {"100", "010"});
    CHECK(translate(c, Codeword::parse("000")) == c);
    CHECK(translate(c, Codeword::parse("111")) == Code::of(3, {"011", "101"}));

    // complement maps the weight-k sphere onto the weight-(n-k) sphere
    std::vector<Codeword> ws;
    for (std::uint64_t v = 0; v < 32; ++v)
        if (std::popcount(v) == 2) ws.emplace_back(5, v);
    Code sphere2(5, ws);
    Code comp = complement(sphere2);
    for (std::size_t i = 0; i < comp.size(); ++i) CHECK(comp.word(i).weight() == 3);
    CHECK(comp.size() == sphere2.size());

    Permutation swap12{2, 1, 3};
    CHECK(permute(Codeword::parse("100"), swap12) == Codeword::parse("010"));
    CHECK(permute(CoordSet::of(3, {1, 3}), swap12) == CoordSet::of(3, {2, 3}));
    CHECK_THROWS_AS(permute(c, Permutation{1, 1, 2}), std::invalid_argument);
}

TEST_CASE("witness equivariance under translation and permutation") {
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(draw_below(4));  // 3..6
        Code c = random_code(n, 14);
        if (c.empty()) continue;
        Codeword word = c.word(draw_below(c.size()));
        CoordSet window(n, draw_below(std::uint64_t{1} << n));
        const bool base = is_witness(c, word, window);

        Codeword x(n, draw_below(std::uint64_t{1} << n));
        CHECK(is_witness(translate(c, x), translate(word, x), window) == base);

        Permutation sigma = random_permutation(n);
        CHECK(is_witness(permute(c, sigma), permute(word, sigma), permute(window, sigma)) == base);
    }
}

TEST_CASE("superset closure and subcode monotonicity") {
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4;
        Code c = random_code(n, 10);
        if (c.empty()) continue;
        Codeword word = c.word(draw_below(c.size()));
        CoordSet w1(n, draw_below(16));
        if (!is_witness(c, word, w1)) continue;

        // any superset is still a witness
        CoordSet w2(n, w1.mask() | draw_below(16));
        CHECK(is_witness(c, word, w2));

        // any subcode keeps the witness
        std::vector<std::uint64_t> sub;
        for (std::uint64_t v : c.word_bits())
            if (v == word.bits() || draw_below(2)) sub.push_back(v);
        Code c2(n, std::move(sub));
        CHECK(is_witness(c2, word, w1));
    }
}
