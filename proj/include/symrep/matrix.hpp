#pragma once

#include <stdexcept>
#include <vector>

#include "symrep/ints.hpp"

namespace symrep {

// Dense exact matrix. Only the handful of operations the engine needs.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int r, int c) { return data_[size_t(r) * size_t(cols_) + size_t(c)]; }
    const T& operator()(int r, int c) const {
        return data_[size_t(r) * size_t(cols_) + size_t(c)];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if ((*this)(r, c) != (r == c ? T(1) : T(0))) return false;
        return true;
    }

    bool is_lower_triangular() const {
        for (int r = 0; r < rows_; ++r)
            for (int c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != T(0)) return false;
        return true;
    }

    bool is_diagonal() const {
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (r != c && (*this)(r, c) != T(0)) return false;
        return true;
    }

    bool has_unit_diagonal() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            if ((*this)(i, i) != T(1)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix<T> out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            const T& arc = a(r, k);
            if (arc == T(0)) continue;
            for (int c = 0; c < b.cols(); ++c) out(r, c) += arc * b(k, c);
        }
    return out;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const T& s) {
    Matrix<T> out = a;
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c) out(r, c) *= s;
    return out;
}

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// Exact inverse of a unit lower-triangular integer matrix by forward
// substitution; the inverse is again integer and unit lower-triangular.
IntMatrix unit_lower_inverse(const IntMatrix& m);

// Exact Gauss-Jordan inverse over the rationals. Throws if singular.
RatMatrix rational_inverse(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

} // namespace symrep
