#pragma once

#include <vector>

#include "symrep/algebra.hpp"
#include "symrep/irrep.hpp"

namespace symrep {

// Scaled unit of one irrep: V = sum_ij (g'^-1)_ij p_ij over the
// unnormalized projectors. V equals scale * (central idempotent), so
// V*V = scale*V and V is constant on conjugacy classes; its class
// coefficients are the integer characters. Kept unnormalized so every
// coefficient stays an exact integer.
IntAlgebra scaled_unit(const IrrepBundle& b);

// Rational unit idempotent V/scale.
RatAlgebra unit_idempotent(const IrrepBundle& b);

struct CharacterTable {
    int n = 0;
    std::vector<ConjugacyClass> classes;          // identity class first
    std::vector<Partition> shapes;                // row order, largest-first
    std::vector<std::vector<Int>> values;         // values[row][class]
};

// Integer character table read off the scaled units: entry (lambda, rho) is
// the coefficient any member of class rho carries in V_lambda, evaluated
// at the class representative.
CharacterTable character_table(int n);

// Murnaghan-Nakayama recursion; completely independent of the projector
// machinery, used as the character oracle.
Int murnaghan_nakayama(const Partition& shape, const CycleType& type);

} // namespace symrep
