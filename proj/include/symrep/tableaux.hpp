#pragma once

#include <string>
#include <vector>

#include "symrep/algebra.hpp"
#include "symrep/partition.hpp"
#include "symrep/permutation.hpp"

namespace symrep {

// Filling of a partition diagram with the symbols 0..n-1, one per cell.
// Rows and columns need not increase; this is the working type for
// relabeled tableaux inside expansions. Text form is 1-based with rows
// joined by '/': "1 2/3".
class TableauFilling {
public:
    TableauFilling() = default;
    TableauFilling(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    int symbol(int r, int c) const { return rows_[size_t(r)][size_t(c)]; }
    int row_of(int symbol) const { return row_of_[size_t(symbol)]; }
    int col_of(int symbol) const { return col_of_[size_t(symbol)]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // Reading sequence: rows concatenated top to bottom.
    std::vector<int> reading_sequence() const;

    // The filling with every symbol x replaced by s(x) (cells unchanged).
    TableauFilling relabel(const Permutation& s) const;

    bool is_standard() const;
    std::string to_string() const;

    friend bool operator==(const TableauFilling& a, const TableauFilling& b) {
        return a.rows_ == b.rows_;
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_, col_of_;
};

// Standard tableau: rows increase left to right, columns increase top to
// bottom. Construction validates.
class StandardTableau : public TableauFilling {
public:
    StandardTableau() = default;
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);
    static StandardTableau parse(const Partition& shape, const std::string& text);
};

// All standard tableaux of the given shape, sorted by reading sequence
// (lexicographic, ascending). For shape (2,1): first "1 2/3", then "1 3/2".
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

// Number of standard tableaux of the shape; enumerates and cross-checks
// against the hook-length formula.
Int dimension(const Partition& shape);

// The permutation carrying the reading sequence of `from` onto that of
// `to`: applied to `from` (symbol relabeling) it yields `to`. Satisfies
// intertwiner(a,a) = e and compose(intertwiner(a,b), intertwiner(b,c)) =
// intertwiner(a,c).
Permutation intertwiner(const TableauFilling& from, const TableauFilling& to);

// Sum of all permutations preserving each row of t setwise.
IntAlgebra row_symmetrizer(const TableauFilling& t);
// Signed sum (by parity) of all permutations preserving each column.
IntAlgebra column_antisymmetrizer(const TableauFilling& t);

} // namespace symrep
