// hitting.hpp -- exact minimum hitting set over small families of bit masks.
//
// A witness for c is exactly a hitting set of the family of difference
// supports {diff(c, c') : c' != c}, so this little branch-and-bound engine
// backs min_witness, the w-witness predicate and the solver's feasibility
// checks.  Masks use the packing of wit/types.hpp; "universe" restricts the
// usable coordinates.  Families here are tiny (at most |C|-1 sets over at
// most 64 points), so the engine favours clarity over cleverness: branch on
// the coordinates of an unhit set of minimum size, bound by a greedy packing
// of disjoint unhit sets.

#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace wit {

struct HittingResult {
    int size = 0;
    std::uint64_t set = 0;
};

/// Minimum-cardinality hitting set using only coordinates in universe.
/// nullopt when no hitting set exists (some set has no usable coordinate).
std::optional<HittingResult> min_hitting_set(std::span<const std::uint64_t> sets,
                                             std::uint64_t universe);

/// Any hitting set of size <= budget (not necessarily minimum), or nullopt.
/// Tries greedy first, then branch-and-bound with the budget as cutoff.
std::optional<std::uint64_t> hitting_set_within(std::span<const std::uint64_t> sets,
                                                std::uint64_t universe, int budget);

/// Lexicographically smallest (by ascending 1-based member list) among the
/// minimum-cardinality hitting sets over [n].
std::optional<std::uint64_t> lex_min_hitting_set(std::span<const std::uint64_t> sets, int n);

/// Repeatedly picks the coordinate hitting the most unhit sets, smallest
/// coordinate on ties.  nullopt iff some set is empty.
std::optional<std::uint64_t> greedy_hitting_set(std::span<const std::uint64_t> sets, int n);

}  // namespace wit
