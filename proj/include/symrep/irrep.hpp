#pragma once

#include <vector>

#include "symrep/algebra.hpp"
#include "symrep/matrix.hpp"
#include "symrep/tableaux.hpp"

namespace symrep {

// Everything the engine derives from one shape: the ordered standard
// tableaux, the reduced g matrix (unit lower-triangular, entries in
// {-1,0,+1}) and its exact integer inverse, the dimension m and the scale
// f = n!/m. The unnormalized g is f * g_reduced and is never stored.
// Immutable after construction.
struct IrrepBundle {
    Partition shape;
    std::vector<StandardTableau> tableaux;
    int dim = 0;   // m, number of standard tableaux
    Int scale = 0; // f = n!/m
    IntMatrix g_reduced;
    IntMatrix g_reduced_inverse;

    int n() const { return shape.n(); }
    const StandardTableau& tableau(int i) const { return tableaux[size_t(i)]; }
    // Intertwiner carrying tableau i onto tableau j; computed on demand
    // (an m x m table of these is implied but would be wasteful to store).
    Permutation sigma(int i, int j) const { return intertwiner(tableau(i), tableau(j)); }
    // Unnormalized g, derived on demand.
    IntMatrix g_unreduced() const { return g_reduced * scale; }
};

IrrepBundle build_irrep_bundle(const Partition& shape);

// Coefficient of s in the projector indexed (i,j); always -1, 0 or +1.
//
// The projector is the chain "column antisymmetrizer of T_i, then
// intertwiner i->j, then row symmetrizer of T_j" (left factor applied
// first). A permutation s carries a nonzero coefficient exactly when it
// factors through that chain; the factorization is detected cell-wise:
// relabel T_j by s^-1, then each symbol y is forced into the cell of T_i
// at (row of y in the relabeled T_j, column of y in T_i). A collision or
// a cell outside the diagram means coefficient 0; otherwise the forced
// assignment is a column permutation of T_i and its parity is the
// coefficient. Cost O(n) per call after the bundle is built.
int projector_coordinate(const IrrepBundle& b, int i, int j, const Permutation& s);

// Coordinate matrix at s: entry (i,j) = projector_coordinate(i,j,s).
IntMatrix coordinate_matrix(const IrrepBundle& b, const Permutation& s);

// Brute-force expansion of the projector (i,j) as a group-algebra product;
// the oracle the coordinate routine is checked against.
IntAlgebra projector_expand(const IrrepBundle& b, int i, int j);

// Dual-family expansion: symmetrizer first, antisymmetrizer last. Related
// to the primary family by the coefficient-wise involution s -> s^-1:
// involution(p_ij) = dual p_ji.
IntAlgebra projector_expand_dual(const IrrepBundle& b, int i, int j);

// All m^2 expansions of a bundle, indexed i*m + j.
std::vector<IntAlgebra> expand_all_projectors(const IrrepBundle& b);

} // namespace symrep
