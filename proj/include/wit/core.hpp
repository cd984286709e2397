// core.hpp -- the witness predicate and its elementary symmetries.
//
// W is a witness for c in C when the projection onto W separates c from every
// other codeword, i.e. W meets the difference support of c and c' for all
// c' != c.  "Has a witness of size w" always means "of size at most w": any
// superset of a witness is a witness.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wit/types.hpp"

namespace wit {

/// Positions where c is 1.
CoordSet support(const Codeword& c);

/// Positions where c and d differ; empty iff c == d.
CoordSet difference_support(const Codeword& c, const Codeword& d);

/// True iff W separates c from every other word of C.  Requires c in C.
bool is_witness(const Code& C, const Codeword& c, const CoordSet& W);

struct WitnessAssignment {
    bool holds = false;
    /// One witness of size exactly min(w, n) per codeword, sorted by word;
    /// filled only when holds.  Each entry is the lexicographically smallest
    /// minimum witness padded with the smallest coordinates not already in it.
    std::vector<std::pair<Codeword, CoordSet>> choice;
    /// Smallest codeword with no witness of size <= w; set only when !holds.
    std::optional<Codeword> first_failure;
};

/// Does every codeword have a witness of size at most w?  0 <= w <= n.
WitnessAssignment has_w_witness_property(const Code& C, int w);

Codeword translate(const Codeword& c, const Codeword& x);
Code translate(const Code& C, const Codeword& x);

Codeword permute(const Codeword& c, const Permutation& sigma);
CoordSet permute(const CoordSet& S, const Permutation& sigma);
Code permute(const Code& C, const Permutation& sigma);

Codeword complement(const Codeword& c);
Code complement(const Code& C);

namespace detail {

/// flags[i] = word i of C (sorted order) has a witness of size exactly w.
/// Uses a full window sweep when C(n,w) is small, per-word hitting-set
/// searches otherwise.
std::vector<bool> witnessed_flags(const Code& C, int w);

}  // namespace detail

}  // namespace wit
