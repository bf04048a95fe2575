#include "symrep/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace symrep {

RatAlgebra to_rational(const IntAlgebra& x) {
    RatAlgebra out;
    for (const auto& [p, c] : x.terms()) out.add_term(p, Rat(c));
    return out;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
    std::map<CycleType, ConjugacyClass> buckets;
    for (const Permutation& p : all_permutations(n)) {
        CycleType t = cycle_type(p);
        ConjugacyClass& cls = buckets[t];
        cls.type = t;
        cls.size += 1;
        cls.class_sum.add_term(p, Int(1));
    }
    std::vector<ConjugacyClass> out;
    out.reserve(buckets.size());
    for (auto& [t, cls] : buckets) {
        if (cls.size != factorial(n) / t.symmetry_factor())
            throw std::logic_error("class size disagrees with symmetry factor for " +
                                   t.to_string());
        out.push_back(std::move(cls));
    }
    // std::map orders cycle types ascending already; the identity class
    // (1,1,...,1) is lexicographically least, so it comes first.
    std::sort(out.begin(), out.end(),
              [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.type < b.type; });
    return out;
}

} // namespace symrep
