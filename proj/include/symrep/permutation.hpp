#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "symrep/partition.hpp"

namespace symrep {

// Permutation of {1..n} in image form. Internally symbols are 0-based:
// image()[k] is the image of symbol k. Text form is 1-based sequence
// notation "[2 1 3]" (the image of 1 first); the parser also accepts the
// compact digit string "213" for n <= 9. Immutable value type; the total
// order is lexicographic on the image sequence, so the identity is the
// minimum of its symmetric group.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<uint8_t> image);

    static Permutation identity(int n);
    // Transposition of 0-based symbols a and b inside {0..n-1}.
    static Permutation transposition(int n, int a, int b);

    int n() const { return int(img_.size()); }
    uint8_t operator[](int k) const { return img_[size_t(k)]; }
    const std::vector<uint8_t>& image() const { return img_; }
    bool is_identity() const;

    std::string to_string() const;
    static Permutation parse(const std::string& text);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<uint8_t> img_;
};

// compose(a, b): apply a first, then b. Image of k is b[a[k]].
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
int parity(const Permutation& p); // +1 / -1, equals (-1)^(n - #cycles)
Partition cycle_type(const Permutation& p);
using CycleType = Partition;

// All n! permutations in lexicographic image order (identity first).
std::vector<Permutation> all_permutations(int n);

} // namespace symrep
