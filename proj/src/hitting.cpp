#include "wit/hitting.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#include "wit/types.hpp"

namespace wit {

namespace {

// Greedy packing of pairwise-disjoint unhit sets: every hitting set needs at
// least one distinct coordinate per packed set.
int packing_lower_bound(const std::vector<std::uint64_t>& unhit) {
    std::uint64_t used = 0;
    int count = 0;
    for (std::uint64_t s : unhit) {
        if ((s & used) == 0) {
            used |= s;
            ++count;
        }
    }
    return count;
}

struct Searcher {
    std::span<const std::uint64_t> sets;
    int best_size = std::numeric_limits<int>::max();
    std::uint64_t best_set = 0;
    bool found = false;
    int cutoff;  // discard solutions larger than this
    bool first_hit_exit;

    // Returns true when the search can stop (first_hit_exit satisfied).
    bool recurse(std::uint64_t chosen, int count, std::uint64_t universe) {
        std::vector<std::uint64_t> unhit;
        std::uint64_t pick = 0;
        int pick_size = std::numeric_limits<int>::max();
        for (std::uint64_t s : sets) {
            if (s & chosen) continue;
            std::uint64_t usable = s & universe;
            if (usable == 0) return false;  // dead branch
            unhit.push_back(usable);
            int sz = std::popcount(usable);
            if (sz < pick_size) {
                pick_size = sz;
                pick = usable;
            }
        }
        if (unhit.empty()) {
            if (count < best_size) {
                best_size = count;
                best_set = chosen;
                found = true;
            }
            return first_hit_exit;
        }
        int bound = count + packing_lower_bound(unhit);
        if (bound >= best_size || bound > cutoff) return false;

        // Branch on each usable coordinate of the smallest unhit set, highest
        // bit (= smallest 1-based coordinate) first; coordinates already
        // tried in earlier branches are excluded from deeper universes.
        std::uint64_t remaining_universe = universe;
        std::uint64_t todo = pick;
        while (todo) {
            int top = 63 - std::countl_zero(todo);
            std::uint64_t bit = std::uint64_t{1} << top;
            todo &= ~bit;
            remaining_universe &= ~bit;
            if (recurse(chosen | bit, count + 1, remaining_universe)) return true;
        }
        return false;
    }
};

std::optional<std::uint64_t> greedy_over_universe(std::span<const std::uint64_t> sets,
                                                  std::uint64_t universe) {
    std::vector<std::uint64_t> unhit;
    unhit.reserve(sets.size());
    for (std::uint64_t s : sets) {
        std::uint64_t usable = s & universe;
        if (usable == 0) return std::nullopt;
        unhit.push_back(usable);
    }
    std::uint64_t chosen = 0;
    while (!unhit.empty()) {
        int best_count = -1;
        int best_bit = -1;
        std::uint64_t candidates = 0;
        for (std::uint64_t s : unhit) candidates |= s;
        // Highest bit first = smallest 1-based coordinate wins ties.
        for (std::uint64_t todo = candidates; todo;) {
            int top = 63 - std::countl_zero(todo);
            std::uint64_t bit = std::uint64_t{1} << top;
            todo &= ~bit;
            int count = 0;
            for (std::uint64_t s : unhit)
                if (s & bit) ++count;
            if (count > best_count) {
                best_count = count;
                best_bit = top;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << best_bit;
        chosen |= bit;
        std::erase_if(unhit, [bit](std::uint64_t s) { return (s & bit) != 0; });
    }
    return chosen;
}

}  // namespace

std::optional<HittingResult> min_hitting_set(std::span<const std::uint64_t> sets,
                                             std::uint64_t universe) {
    auto greedy = greedy_over_universe(sets, universe);
    if (!greedy) return std::nullopt;
    Searcher search{sets, std::popcount(*greedy), *greedy, true,
                    std::numeric_limits<int>::max(), false};
    search.recurse(0, 0, universe);
    return HittingResult{search.best_size, search.best_set};
}

std::optional<std::uint64_t> hitting_set_within(std::span<const std::uint64_t> sets,
                                                std::uint64_t universe, int budget) {
    if (budget < 0) return std::nullopt;
    auto greedy = greedy_over_universe(sets, universe);
    if (!greedy) return std::nullopt;
    if (std::popcount(*greedy) <= budget) return greedy;
    Searcher search{sets, budget + 1, 0, false, budget, true};
    search.recurse(0, 0, universe);
    if (!search.found) return std::nullopt;
    return search.best_set;
}

std::optional<std::uint64_t> lex_min_hitting_set(std::span<const std::uint64_t> sets, int n) {
    const std::uint64_t full = detail::full_mask(n);
    auto minimum = min_hitting_set(sets, full);
    if (!minimum) return std::nullopt;
    const int target = minimum->size;
    if (target == 0) return std::uint64_t{0};

    // Build the answer coordinate by coordinate: the lex-min solution's next
    // element is the smallest coordinate that still extends to a hitting set
    // of the target size using only later coordinates.
    std::uint64_t chosen = 0;
    int placed = 0;
    std::vector<std::uint64_t> remaining(sets.begin(), sets.end());
    for (int j = 1; j <= n && placed < target; ++j) {
        std::uint64_t bit = detail::coord_bit(n, j);
        std::uint64_t tail_universe = bit - 1;  // coordinates strictly after j
        std::vector<std::uint64_t> reduced;
        for (std::uint64_t s : remaining)
            if (!(s & bit)) reduced.push_back(s);
        int slack = target - placed - 1;
        bool ok;
        if (reduced.empty()) {
            ok = true;
        } else if (slack == 0) {
            ok = false;
        } else {
            ok = hitting_set_within(reduced, tail_universe, slack).has_value();
        }
        if (ok) {
            chosen |= bit;
            ++placed;
            remaining = std::move(reduced);
        }
    }
    return chosen;
}

std::optional<std::uint64_t> greedy_hitting_set(std::span<const std::uint64_t> sets, int n) {
    return greedy_over_universe(sets, detail::full_mask(n));
}

}  // namespace wit
