// types.hpp -- bit-packed domain types for binary codes over [n] = {1..n}
//
// Packing convention: a length-n word stores coordinate j (1-based) in bit
// (n - j) of a uint64_t, so the usual bitstring "c1 c2 ... cn" read as a
// binary numeral equals the stored value.  Integer order on stored values is
// therefore lexicographic order on bitstrings.  All public interfaces speak
// 1-based coordinates; n is capped at 64 so words and coordinate sets fit a
// machine word.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wit {

inline constexpr int kMaxLength = 64;

namespace detail {

inline void check_length(int n) {
    if (n < 1 || n > kMaxLength)
        throw std::invalid_argument("length must be in [1,64], got " + std::to_string(n));
}

inline std::uint64_t full_mask(int n) {
    check_length(n);
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Bit holding coordinate j of a length-n word.
inline std::uint64_t coord_bit(int n, int j) {
    return std::uint64_t{1} << (n - j);
}

}  // namespace detail

/// A binary word of fixed length n (1 <= n <= 64).
class Codeword {
  public:
    Codeword() = default;

    Codeword(int length, std::uint64_t bits) : length_(length), bits_(bits) {
        detail::check_length(length);
        if (bits & ~detail::full_mask(length))
            throw std::invalid_argument("codeword has bits beyond position n");
    }

    static Codeword zero(int length) { return Codeword(length, 0); }
    static Codeword ones(int length) { return Codeword(length, detail::full_mask(length)); }

    /// Parses "0110..." with the leftmost character at coordinate 1.
    static Codeword parse(std::string_view s) {
        detail::check_length(static_cast<int>(s.size()));
        std::uint64_t bits = 0;
        for (char ch : s) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("codeword string must be over {0,1}");
            bits = (bits << 1) | static_cast<std::uint64_t>(ch - '0');
        }
        return Codeword(static_cast<int>(s.size()), bits);
    }

    int length() const { return length_; }
    std::uint64_t bits() const { return bits_; }
    int weight() const { return std::popcount(bits_); }

    bool bit(int coord) const {
        check_coord(coord);
        return bits_ & detail::coord_bit(length_, coord);
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(length_), '0');
        for (int j = 1; j <= length_; ++j)
            if (bits_ & detail::coord_bit(length_, j)) s[static_cast<std::size_t>(j - 1)] = '1';
        return s;
    }

    friend auto operator<=>(const Codeword&, const Codeword&) = default;

  private:
    void check_coord(int coord) const {
        if (coord < 1 || coord > length_) throw std::invalid_argument("coordinate out of range");
    }

    int length_ = 0;
    std::uint64_t bits_ = 0;
};

/// A subset of the coordinate positions [n]; doubles as window, witness,
/// support and design block.
class CoordSet {
  public:
    CoordSet() = default;

    CoordSet(int length, std::uint64_t mask) : length_(length), mask_(mask) {
        detail::check_length(length);
        if (mask & ~detail::full_mask(length))
            throw std::invalid_argument("coordinate set reaches beyond [n]");
    }

    static CoordSet empty(int length) { return CoordSet(length, 0); }
    static CoordSet full(int length) { return CoordSet(length, detail::full_mask(length)); }

    static CoordSet of(int length, std::initializer_list<int> coords) {
        return from_members(length, std::vector<int>(coords));
    }

    static CoordSet from_members(int length, const std::vector<int>& coords) {
        detail::check_length(length);
        std::uint64_t mask = 0;
        for (int j : coords) {
            if (j < 1 || j > length) throw std::invalid_argument("coordinate out of range");
            mask |= detail::coord_bit(length, j);
        }
        return CoordSet(length, mask);
    }

    int length() const { return length_; }
    std::uint64_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    bool is_empty() const { return mask_ == 0; }

    bool contains(int coord) const {
        if (coord < 1 || coord > length_) throw std::invalid_argument("coordinate out of range");
        return mask_ & detail::coord_bit(length_, coord);
    }

    bool subset_of(const CoordSet& other) const {
        require_same_length(other);
        return (mask_ & ~other.mask_) == 0;
    }

    CoordSet with(int coord) const {
        if (coord < 1 || coord > length_) throw std::invalid_argument("coordinate out of range");
        return CoordSet(length_, mask_ | detail::coord_bit(length_, coord));
    }

    /// Ascending 1-based member list.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int j = 1; j <= length_; ++j)
            if (mask_ & detail::coord_bit(length_, j)) out.push_back(j);
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int j : members()) {
            if (!first) s += ',';
            s += std::to_string(j);
            first = false;
        }
        return s + "}";
    }

    /// Lexicographic order on ascending member lists ({1,3} < {2,3}, {1} < {1,2}).
    static bool lex_less(const CoordSet& a, const CoordSet& b) {
        return a.members() < b.members();
    }

    friend bool operator==(const CoordSet&, const CoordSet&) = default;

  private:
    void require_same_length(const CoordSet& other) const {
        if (length_ != other.length_) throw std::invalid_argument("coordinate sets of different length");
    }

    int length_ = 0;
    std::uint64_t mask_ = 0;
};

/// A finite set of distinct codewords of common length n.  Words are kept
/// sorted ascending (= bitstring-lexicographic); duplicates collapse.
class Code {
  public:
    explicit Code(int length) : length_(length) { detail::check_length(length); }

    Code(int length, std::vector<std::uint64_t> words) : length_(length), words_(std::move(words)) {
        const std::uint64_t full = detail::full_mask(length);
        for (std::uint64_t v : words_)
            if (v & ~full) throw std::invalid_argument("codeword has bits beyond position n");
        normalize();
    }

    Code(int length, const std::vector<Codeword>& words) : length_(length) {
        detail::check_length(length);
        words_.reserve(words.size());
        for (const Codeword& c : words) {
            if (c.length() != length) throw std::invalid_argument("codeword length differs from code length");
            words_.push_back(c.bits());
        }
        normalize();
    }

    /// Convenience for literals: Code::of(4, {"1100", "0011"}).
    static Code of(int length, std::initializer_list<std::string_view> strs) {
        std::vector<Codeword> ws;
        for (std::string_view s : strs) ws.push_back(Codeword::parse(s));
        return Code(length, ws);
    }

    int length() const { return length_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    bool contains(const Codeword& c) const {
        require_same_length(c.length());
        return std::binary_search(words_.begin(), words_.end(), c.bits());
    }

    const std::vector<std::uint64_t>& word_bits() const { return words_; }

    Codeword word(std::size_t i) const { return Codeword(length_, words_.at(i)); }

    std::vector<Codeword> words() const {
        std::vector<Codeword> out;
        out.reserve(words_.size());
        for (std::uint64_t v : words_) out.emplace_back(length_, v);
        return out;
    }

    Code with(const Codeword& c) const {
        require_same_length(c.length());
        std::vector<std::uint64_t> ws = words_;
        ws.push_back(c.bits());
        return Code(length_, std::move(ws));
    }

    Code without(const Codeword& c) const {
        require_same_length(c.length());
        std::vector<std::uint64_t> ws;
        ws.reserve(words_.size());
        for (std::uint64_t v : words_)
            if (v != c.bits()) ws.push_back(v);
        return Code(length_, std::move(ws));
    }

    friend bool operator==(const Code&, const Code&) = default;

  private:
    void normalize() {
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    void require_same_length(int other) const {
        if (other != length_) throw std::invalid_argument("codeword length differs from code length");
    }

    int length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// sigma[j-1] is the image of coordinate j; must be a bijection on [n].
using Permutation = std::vector<int>;

inline void check_permutation(int n, const Permutation& sigma) {
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation size differs from n");
    std::uint64_t seen = 0;
    for (int img : sigma) {
        if (img < 1 || img > n) throw std::invalid_argument("permutation image out of range");
        std::uint64_t b = detail::coord_bit(n, img);
        if (seen & b) throw std::invalid_argument("permutation repeats an image");
        seen |= b;
    }
}

}  // namespace wit
