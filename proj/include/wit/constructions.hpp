// constructions.hpp -- generators for witness-friendly code families.
//
// The generic construction: given a family F of coordinate subsets of size
// at most w, take every word whose support lies in exactly ONE block of F.
// Each such word is witnessed by its containing block, so the result has the
// w-witness property for w = max block size.  Steiner systems make the
// blocks pack perfectly; the two-part construction glues a cube on the first
// w coordinates to a layer of weight-w words steered by a seed code D.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wit/numeric.hpp"
#include "wit/types.hpp"

namespace wit {

/// An ordered family of distinct coordinate subsets of [n].
class SetFamily {
  public:
    explicit SetFamily(int length) : length_(length) { detail::check_length(length); }

    SetFamily(int length, std::vector<CoordSet> blocks) : length_(length), blocks_(std::move(blocks)) {
        detail::check_length(length);
        for (const CoordSet& b : blocks_)
            if (b.length() != length_) throw std::invalid_argument("block length differs from family length");
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            for (std::size_t j = i + 1; j < blocks_.size(); ++j)
                if (blocks_[i] == blocks_[j]) throw std::invalid_argument("duplicate block in family");
    }

    int length() const { return length_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<CoordSet>& blocks() const { return blocks_; }

  private:
    int length_ = 0;
    std::vector<CoordSet> blocks_;
};

struct DesignCheck {
    int t = 0;
    int k = 0;  // common block size, or -1 when blocks are not uniform
    int v = 0;
    bool is_steiner = false;        // every t-subset of [v] in exactly one block
    int max_pair_intersection = 0;  // over distinct block pairs (0 if < 2 blocks)
};

/// Verifies the S(t,k,v) property by exhaustive t-subset counting.
DesignCheck check_design(const SetFamily& family, int t);

/// All C(n,k) words of weight k.
Code sphere(int n, int k);

/// All 2^|W| words supported inside W, extended by zeros.
Code cube_on_window(int n, const CoordSet& W);

/// Words whose support lies in exactly one block of the family.
Code from_family(const SetFamily& family);

/// The 14 blocks of the Steiner system S(3,4,8): supports of the weight-4
/// codewords of the extended [8,4] binary Hamming code.
SetFamily steiner_3_4_8();

/// The 132 blocks of S(5,6,12): the distinct supports of the 264 weight-6
/// codewords of the extended ternary Golay [12,6] code.
SetFamily steiner_5_6_12();

/// |C_F| for a distance-d constant-weight-w family of size A:
/// A * ball_size(w, d/2 - 1).  d must be even.
BigInt steiner_family_code_size(const BigInt& A, int w, int d);

inline constexpr int kCwSearchDefaultEffort = 16;
inline constexpr std::uint64_t kCwSearchDefaultSeed = 1;

/// Seeded randomized greedy + force-insert local search for a family of
/// weight-w supports with pairwise intersections <= w - d/2 (i.e. a
/// constant-weight code of minimum distance d).  Size is a lower bound on
/// A(n,d,w) only.  d must be even; d = 2 returns all C(n,w) blocks.
SetFamily cw_code_search(int n, int d, int w, int effort = kCwSearchDefaultEffort,
                         std::uint64_t seed = kCwSearchDefaultSeed);

/// Two-part construction: D is a code of length w > n/2 whose words all have
/// weight >= 2w - n.  C1 = words of {0,1}^w outside D, zero-extended; C2 =
/// weight-w words of length n whose first-w projection lies in D.
Code two_part(int n, int w, const Code& D);

/// two_part with D = the weight-(w-t) words of {0,1}^w.  Requires w > n/2,
/// t >= 1 and w - t >= 2w - n.  Size is exactly
/// 2^w + C(w,w-t) (C(n-w,t) - 1).
Code two_part_sphere(int n, int w, int t);

/// The illustration's stated range is 1 <= t <= floor((n-w)/2); values beyond
/// it still satisfy the minimum-weight condition up to t = n - w.
bool two_part_t_in_stated_range(int n, int w, int t);

struct SphereSignature {
    bool is_sphere_translate = false;
    /// histogram[v] = number of size-w windows witnessing exactly v codewords.
    std::map<std::uint64_t, std::uint64_t> window_count_histogram;
};

/// Is C a translate of the radius-floor(n/2) sphere?  Plus the histogram of
/// per-window witnessed-codeword counts, which separates sphere translates
/// (all 2) from Steiner-derived families (w+1 on blocks).  n <= 24.
SphereSignature sphere_translate_signature(const Code& C, int w);

}  // namespace wit
