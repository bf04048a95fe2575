#include "symrep/characters.hpp"

#include <algorithm>
#include <map>

namespace symrep {

namespace {

Int unit_coefficient(const IrrepBundle& b, const Permutation& s) {
    Int acc = 0;
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            const Int& w = b.g_reduced_inverse(i, j);
            if (w == 0) continue;
            int y = projector_coordinate(b, i, j, s);
            if (y) acc += w * y;
        }
    return acc;
}

} // namespace

IntAlgebra scaled_unit(const IrrepBundle& b) {
    IntAlgebra v;
    for (const Permutation& s : all_permutations(b.n())) v.add_term(s, unit_coefficient(b, s));
    return v;
}

RatAlgebra unit_idempotent(const IrrepBundle& b) {
    RatAlgebra e;
    const IntAlgebra v = scaled_unit(b);
    for (const auto& [p, c] : v.terms()) e.add_term(p, Rat(c) / Rat(b.scale));
    return e;
}

CharacterTable character_table(int n) {
    CharacterTable t;
    t.n = n;
    t.classes = conjugacy_classes(n);
    for (const Partition& shape : partitions(n)) {
        IrrepBundle b = build_irrep_bundle(shape);
        std::vector<Int> row;
        row.reserve(t.classes.size());
        for (const ConjugacyClass& cls : t.classes)
            row.push_back(unit_coefficient(b, cls.representative()));
        t.shapes.push_back(shape);
        t.values.push_back(std::move(row));
    }
    return t;
}

namespace {

// First-column hook lengths ("beta numbers"), strictly decreasing.
std::vector<int> beta_numbers(const Partition& shape) {
    int rows = shape.rows();
    std::vector<int> beta(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) beta[size_t(i)] = shape.part(i) + (rows - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int rows = int(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < rows; ++i) {
        int part = beta[size_t(i)] - (rows - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

Int mn_recurse(const Partition& shape, const std::vector<int>& cycles, size_t at,
               std::map<MnKey, Int>& memo) {
    if (at == cycles.size()) return shape.n() == 0 ? Int(1) : Int(0);
    MnKey key{shape.parts(), std::vector<int>(cycles.begin() + long(at), cycles.end())};
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    // Remove one border strip of length k: pick a beta number that drops
    // by k onto an unoccupied value; the strip height is the number of
    // beta numbers jumped over, giving the sign.
    int k = cycles[at];
    std::vector<int> beta = beta_numbers(shape);
    Int acc = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - k;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++height;
        std::vector<int> next = beta;
        next[i] = target;
        Int sub = mn_recurse(partition_from_beta(std::move(next)), cycles, at + 1, memo);
        acc += (height % 2 ? -sub : sub);
    }
    memo[key] = acc;
    return acc;
}

} // namespace

Int murnaghan_nakayama(const Partition& shape, const CycleType& type) {
    if (shape.n() != type.n())
        throw std::invalid_argument("character of mismatched degree: shape " + shape.to_string() +
                                    ", cycle type " + type.to_string());
    static thread_local std::map<MnKey, Int> memo;
    return mn_recurse(shape, type.parts(), 0, memo);
}

} // namespace symrep
