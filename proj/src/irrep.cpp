#include "symrep/irrep.hpp"

#include <stdexcept>

namespace symrep {

IrrepBundle build_irrep_bundle(const Partition& shape) {
    IrrepBundle b;
    b.shape = shape;
    b.tableaux = standard_tableaux(shape);
    b.dim = int(b.tableaux.size());
    if (Int(b.dim) != shape.hook_dimension())
        throw std::logic_error("tableau count disagrees with hook formula for " +
                               shape.to_string());
    Int order = factorial(shape.n());
    if (order % b.dim != 0)
        throw std::logic_error("dimension does not divide group order for " + shape.to_string());
    b.scale = order / b.dim;

    // g_reduced is the transpose of the coordinate matrix at the identity.
    Permutation e = Permutation::identity(shape.n());
    b.g_reduced = IntMatrix(b.dim, b.dim);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            b.g_reduced(j, i) = Int(projector_coordinate(b, i, j, e));
    if (!b.g_reduced.is_lower_triangular() || !b.g_reduced.has_unit_diagonal())
        throw std::logic_error("g matrix is not unit lower-triangular for " + shape.to_string());
    b.g_reduced_inverse = unit_lower_inverse(b.g_reduced);
    return b;
}

int projector_coordinate(const IrrepBundle& b, int i, int j, const Permutation& s) {
    const StandardTableau& ti = b.tableau(i);
    const StandardTableau& tj = b.tableau(j);
    int n = b.n();
    int cols = b.shape.part(0);

    // Scratch buffers; reused across calls, one set per thread.
    thread_local std::vector<int> forced, cell_used;
    thread_local std::vector<char> seen;
    forced.assign(size_t(n), -1);
    cell_used.assign(size_t(b.shape.rows()) * size_t(cols), 0);

    // Symbol y sits in the relabeled tableau T_j . s^-1 at the cell that
    // holds s(y) in T_j itself.
    for (int y = 0; y < n; ++y) {
        int r = tj.row_of(s[y]);
        int c = ti.col_of(y);
        if (c >= b.shape.part(r)) return 0; // forced cell outside the diagram
        size_t cell = size_t(r) * size_t(cols) + size_t(c);
        if (cell_used[cell]) return 0; // two symbols forced into one cell
        cell_used[cell] = 1;
        forced[size_t(y)] = ti.symbol(r, c);
    }

    // `forced` is a column permutation of T_i; its parity is the
    // coefficient: 1 - 2*(sum of (cycle length - 1) mod 2).
    seen.assign(size_t(n), 0);
    int swaps = 0;
    for (int y = 0; y < n; ++y) {
        if (seen[size_t(y)]) continue;
        int len = 0;
        for (int z = y; !seen[size_t(z)]; z = forced[size_t(z)]) {
            seen[size_t(z)] = 1;
            ++len;
        }
        swaps += len - 1;
    }
    return 1 - 2 * (swaps % 2);
}

IntMatrix coordinate_matrix(const IrrepBundle& b, const Permutation& s) {
    IntMatrix m(b.dim, b.dim);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) m(i, j) = Int(projector_coordinate(b, i, j, s));
    return m;
}

IntAlgebra projector_expand(const IrrepBundle& b, int i, int j) {
    IntAlgebra anti = column_antisymmetrizer(b.tableau(i));
    IntAlgebra sym = row_symmetrizer(b.tableau(j));
    IntAlgebra mid = algebra_multiply(anti, IntAlgebra::single(b.sigma(i, j)));
    return algebra_multiply(mid, sym);
}

IntAlgebra projector_expand_dual(const IrrepBundle& b, int i, int j) {
    IntAlgebra sym = row_symmetrizer(b.tableau(i));
    IntAlgebra anti = column_antisymmetrizer(b.tableau(j));
    IntAlgebra mid = algebra_multiply(sym, IntAlgebra::single(b.sigma(i, j)));
    return algebra_multiply(mid, anti);
}

std::vector<IntAlgebra> expand_all_projectors(const IrrepBundle& b) {
    std::vector<IntAlgebra> out;
    out.reserve(size_t(b.dim) * size_t(b.dim));
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) out.push_back(projector_expand(b, i, j));
    return out;
}

} // namespace symrep
