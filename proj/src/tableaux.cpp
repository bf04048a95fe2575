#include "symrep/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symrep {

TableauFilling::TableauFilling(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (int(rows_.size()) != shape_.rows())
        throw std::invalid_argument("row count does not match shape");
    int n = shape_.n();
    row_of_.assign(size_t(n), -1);
    col_of_.assign(size_t(n), -1);
    for (int r = 0; r < shape_.rows(); ++r) {
        if (int(rows_[size_t(r)].size()) != shape_.part(r))
            throw std::invalid_argument("row length does not match shape");
        for (int c = 0; c < shape_.part(r); ++c) {
            int sym = rows_[size_t(r)][size_t(c)];
            if (sym < 0 || sym >= n || row_of_[size_t(sym)] != -1)
                throw std::invalid_argument("filling is not a bijection onto 0..n-1");
            row_of_[size_t(sym)] = r;
            col_of_[size_t(sym)] = c;
        }
    }
}

std::vector<int> TableauFilling::reading_sequence() const {
    std::vector<int> seq;
    seq.reserve(size_t(n()));
    for (const auto& row : rows_) seq.insert(seq.end(), row.begin(), row.end());
    return seq;
}

TableauFilling TableauFilling::relabel(const Permutation& s) const {
    std::vector<std::vector<int>> rows = rows_;
    for (auto& row : rows)
        for (int& sym : row) sym = s[sym];
    return TableauFilling(shape_, std::move(rows));
}

bool TableauFilling::is_standard() const {
    for (int r = 0; r < shape_.rows(); ++r)
        for (int c = 0; c < shape_.part(r); ++c) {
            if (c + 1 < shape_.part(r) && symbol(r, c) >= symbol(r, c + 1)) return false;
            if (r + 1 < shape_.rows() && c < shape_.part(r + 1) && symbol(r, c) >= symbol(r + 1, c))
                return false;
        }
    return true;
}

std::string TableauFilling::to_string() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << '/';
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ' ';
            os << rows_[r][c] + 1;
        }
    }
    return os.str();
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : TableauFilling(std::move(shape), std::move(rows)) {
    if (!is_standard()) throw std::invalid_argument("filling is not standard: " + to_string());
}

StandardTableau StandardTableau::parse(const Partition& shape, const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream is(text);
    std::string rowtext;
    while (std::getline(is, rowtext, '/')) {
        std::istringstream rs(rowtext);
        std::vector<int> row;
        int v;
        while (rs >> v) row.push_back(v - 1);
        rows.push_back(std::move(row));
    }
    return StandardTableau(shape, std::move(rows));
}

namespace {

void fill_tableaux(const Partition& shape, int next_symbol, std::vector<int>& fill_count,
                   std::vector<std::vector<int>>& rows, std::vector<StandardTableau>& out) {
    if (next_symbol == shape.n()) {
        out.emplace_back(shape, rows);
        return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
        int c = fill_count[size_t(r)];
        if (c >= shape.part(r)) continue;
        if (r > 0 && fill_count[size_t(r - 1)] <= c) continue; // cell above still empty
        rows[size_t(r)].push_back(next_symbol);
        fill_count[size_t(r)]++;
        fill_tableaux(shape, next_symbol + 1, fill_count, rows, out);
        fill_count[size_t(r)]--;
        rows[size_t(r)].pop_back();
    }
}

} // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<StandardTableau> out;
    std::vector<int> fill_count(size_t(shape.rows()), 0);
    std::vector<std::vector<int>> rows(size_t(shape.rows()));
    fill_tableaux(shape, 0, fill_count, rows, out);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_sequence() < b.reading_sequence();
    });
    return out;
}

Int dimension(const Partition& shape) {
    Int count = Int(standard_tableaux(shape).size());
    if (count != shape.hook_dimension())
        throw std::logic_error("tableau count disagrees with hook formula for " +
                               shape.to_string());
    return count;
}

Permutation intertwiner(const TableauFilling& from, const TableauFilling& to) {
    if (!(from.shape() == to.shape()))
        throw std::invalid_argument("intertwiner requires equal shapes");
    std::vector<int> a = from.reading_sequence(), b = to.reading_sequence();
    std::vector<uint8_t> img(a.size());
    for (size_t p = 0; p < a.size(); ++p) img[size_t(a[p])] = uint8_t(b[p]);
    return Permutation(std::move(img));
}

namespace {

// All permutations moving symbols only inside the given disjoint blocks:
// the direct product of the symmetric groups on each block.
std::vector<Permutation> block_subgroup(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> result{Permutation::identity(n)};
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<int> target = block;
        std::sort(target.begin(), target.end());
        std::vector<int> base = target;
        std::vector<Permutation> arrangements;
        do {
            std::vector<uint8_t> img(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k) img[size_t(k)] = uint8_t(k);
            for (size_t k = 0; k < base.size(); ++k) img[size_t(base[k])] = uint8_t(target[k]);
            arrangements.push_back(Permutation(std::move(img)));
        } while (std::next_permutation(target.begin(), target.end()));
        std::vector<Permutation> next;
        next.reserve(result.size() * arrangements.size());
        for (const Permutation& r : result)
            for (const Permutation& a : arrangements) next.push_back(compose(r, a));
        result = std::move(next);
    }
    return result;
}

std::vector<std::vector<int>> column_blocks(const TableauFilling& t) {
    std::vector<std::vector<int>> cols(size_t(t.shape().part(0)));
    for (int r = 0; r < t.shape().rows(); ++r)
        for (int c = 0; c < t.shape().part(r); ++c) cols[size_t(c)].push_back(t.symbol(r, c));
    return cols;
}

} // namespace

IntAlgebra row_symmetrizer(const TableauFilling& t) {
    IntAlgebra sum;
    for (const Permutation& h : block_subgroup(t.n(), t.rows())) sum.add_term(h, Int(1));
    return sum;
}

IntAlgebra column_antisymmetrizer(const TableauFilling& t) {
    IntAlgebra sum;
    for (const Permutation& v : block_subgroup(t.n(), column_blocks(t)))
        sum.add_term(v, Int(parity(v)));
    return sum;
}

} // namespace symrep
