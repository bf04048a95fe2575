#pragma once

#include "symrep/irrep.hpp"

namespace symrep {

// Reduced representation matrix of one permutation in one irrep. The
// entries of `entries` are expected to lie in {-1,0,+1}; `reduced` records
// whether they actually do, so a violation surfaces as a reportable
// finding instead of an assertion failure.
struct RepMatrix {
    Permutation perm;
    Partition shape;
    IntMatrix entries; // x'(b)
    bool reduced = true;
};

// x'(b) = g'^-1 * transpose(y(b^-1)) * g'^-1, where y is the coordinate
// matrix. Exact integers; no n!-sized solve involved.
RepMatrix rep_matrix(const IrrepBundle& b, const Permutation& perm);

// The matrix that multiplies like the group: M(b) = x'(b) * g'. Satisfies
// M(compose(a,b)) = M(a)*M(b); its trace is the character.
IntMatrix conventional_matrix(const IrrepBundle& b, const Permutation& perm);

bool entries_reduced(const IntMatrix& m);

} // namespace symrep
