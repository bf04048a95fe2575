#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "symrep/ints.hpp"

namespace symrep {

// Integer partition with parts in weakly decreasing order. Doubles as a
// cycle type (the multiset of cycle lengths of a permutation). Text form
// is comma-separated: "3,2,2".
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const { return total_; }                  // sum of parts
    int rows() const { return int(parts_.size()); }   // number of parts
    int part(int r) const { return parts_[size_t(r)]; }
    const std::vector<int>& parts() const { return parts_; }

    // Conjugate partition (columns of the diagram read as rows).
    Partition conjugate() const;

    // Number of standard fillings of the diagram, by the hook-length
    // formula: n! / prod(hooks). Used as an independent cross-check of
    // tableau enumeration.
    Int hook_dimension() const;

    // Symmetry factor z = prod(k^m_k * m_k!) over cycle lengths k with
    // multiplicity m_k; the centralizer order of the cycle type, so the
    // conjugacy class has n!/z elements.
    Int symmetry_factor() const;

    std::string to_string() const;
    static Partition parse(const std::string& text);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

// All partitions of n, largest-first ("reverse lexicographic"):
// partitions(3) = (3), (2,1), (1,1,1).
std::vector<Partition> partitions(int n);

Int factorial(int n);

} // namespace symrep
