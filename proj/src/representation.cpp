#include "symrep/representation.hpp"

namespace symrep {

bool entries_reduced(const IntMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const Int& v = m(r, c);
            if (v != Int(0) && v != Int(1) && v != Int(-1)) return false;
        }
    return true;
}

RepMatrix rep_matrix(const IrrepBundle& b, const Permutation& perm) {
    RepMatrix rm;
    rm.perm = perm;
    rm.shape = b.shape;
    IntMatrix y = coordinate_matrix(b, inverse(perm));
    rm.entries = b.g_reduced_inverse * y.transpose() * b.g_reduced_inverse;
    rm.reduced = entries_reduced(rm.entries);
    return rm;
}

IntMatrix conventional_matrix(const IrrepBundle& b, const Permutation& perm) {
    return rep_matrix(b, perm).entries * b.g_reduced;
}

} // namespace symrep
