#include "symrep/matrix.hpp"

namespace symrep {

IntMatrix unit_lower_inverse(const IntMatrix& m) {
    int n = m.rows();
    if (!m.is_lower_triangular() || !m.has_unit_diagonal())
        throw std::invalid_argument("matrix is not unit lower-triangular");
    IntMatrix inv = IntMatrix::identity(n);
    // Column c of the inverse, top to bottom: inv(r,c) solves
    // sum_k m(r,k) inv(k,c) = [r==c] with inv(r,c) entering at k = r.
    for (int c = 0; c < n; ++c)
        for (int r = c + 1; r < n; ++r) {
            Int acc = 0;
            for (int k = c; k < r; ++k) acc += m(r, k) * inv(k, c);
            inv(r, c) = -acc;
        }
    return inv;
}

RatMatrix rational_inverse(const RatMatrix& m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != Rat(0)) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        Rat scale = Rat(1) / a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == Rat(0)) continue;
            Rat factor = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = Rat(m(r, c));
    return out;
}

} // namespace symrep
