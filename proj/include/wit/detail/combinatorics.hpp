// Internal enumeration helpers shared across modules.

#pragma once

#include <cstdint>
#include <vector>

#include "wit/types.hpp"

namespace wit::detail {

// Visits every k-subset of [n] as a packed mask, in lexicographic order of
// ascending member lists ({1,2} before {1,3} before {2,3}).
template <typename Fn>
void for_each_window(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        std::uint64_t mask = 0;
        for (int j : idx) mask |= coord_bit(n, j);
        fn(mask);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < k; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

// Number of k-subsets as a uint64, saturating at cap (used for guards).
inline std::uint64_t window_count_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    // C(n,k) by the multiplicative formula, stopping once cap is exceeded.
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace wit::detail
