#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symrep/ints.hpp"
#include "symrep/permutation.hpp"

namespace symrep {

// Sparse element of the group algebra: a finite formal sum of permutations
// of a common degree with exact coefficients. Zero coefficients are never
// stored, so equality is map equality. The ordered map keeps every
// iteration deterministic. Value semantics throughout; operations never
// mutate their arguments, so shared elements are safe to read from
// multiple threads.
template <typename C>
class AlgebraElement {
public:
    using Terms = std::map<Permutation, C>;

    AlgebraElement() = default;
    static AlgebraElement unit(int n) { return single(Permutation::identity(n)); }
    static AlgebraElement single(const Permutation& p, C coeff = C(1)) {
        AlgebraElement e;
        if (!(coeff == C(0))) e.terms_[p] = std::move(coeff);
        return e;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    C coefficient(const Permutation& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Permutation& p, const C& coeff) {
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            if (!(coeff == C(0))) terms_.emplace(p, coeff);
            return;
        }
        it->second += coeff;
        if (it->second == C(0)) terms_.erase(it);
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [p, c] : o.terms_) add_term(p, C(0) - c);
        return *this;
    }
    AlgebraElement& operator*=(const C& s) {
        if (s == C(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, c] : terms_) c *= s;
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const C& s) { return a *= s; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_;
    }

    // Coefficient-wise involution s -> s^-1. An anti-automorphism of the
    // algebra: involution(x*y) = involution(y)*involution(x).
    AlgebraElement involution() const {
        AlgebraElement out;
        for (const auto& [p, c] : terms_) out.terms_.emplace(inverse(p), c);
        return out;
    }

private:
    Terms terms_;
};

// Bilinear convolution extending compose: the coefficient of s in x*y is
// the sum of x(a)*y(b) over all factorizations compose(a,b) = s.
template <typename C>
AlgebraElement<C> algebra_multiply(const AlgebraElement<C>& x, const AlgebraElement<C>& y) {
    AlgebraElement<C> out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add_term(compose(a, b), ca * cb);
    return out;
}

template <typename C>
AlgebraElement<C> operator*(const AlgebraElement<C>& x, const AlgebraElement<C>& y) {
    return algebra_multiply(x, y);
}

using IntAlgebra = AlgebraElement<Int>;
using RatAlgebra = AlgebraElement<Rat>;

RatAlgebra to_rational(const IntAlgebra& x);

struct ConjugacyClass {
    CycleType type;
    Int size = 0;          // n!/symmetry_factor, cross-checked on build
    IntAlgebra class_sum;  // sum of all members with coefficient 1
    Permutation representative() const { return class_sum.terms().begin()->first; }
};

// Conjugacy classes of the degree-n symmetric group, ordered by ascending
// lexicographic cycle type (parts written descending), so the identity
// class (1,...,1) comes first. For n = 5 the types are (1^5), (2,1,1,1),
// (2,2,1), (3,1,1), (3,2), (4,1), (5) with sizes 1, 10, 15, 20, 20, 30, 24.
std::vector<ConjugacyClass> conjugacy_classes(int n);

} // namespace symrep
