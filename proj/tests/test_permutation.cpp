#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "symrep/algebra.hpp"
#include "symrep/permutation.hpp"

using namespace symrep;

namespace {

Permutation perm(const std::string& text) { return Permutation::parse(text); }

// The six degree-3 permutations in lexicographic image order.
std::vector<Permutation> s3() { return all_permutations(3); }

} // namespace

TEST_CASE("parse and format round-trip") {
    CHECK(perm("[2 1 3]").to_string() == "[2 1 3]");
    CHECK(perm("213") == perm("[2 1 3]"));
    CHECK(perm("[10 2 3 4 5 6 7 8 9 1]").n() == 10);
    CHECK(Permutation::identity(4).to_string() == "[1 2 3 4]");
    CHECK(Permutation::identity(3).is_identity());
    CHECK_FALSE(perm("213").is_identity());

    CHECK_THROWS_AS(Permutation::parse("[1 1 2]"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("[0 1 2]"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("[2 1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("2x1"), std::invalid_argument);
}

TEST_CASE("composition applies the left factor first") {
    const auto s = s3();
    // Frozen 6x6 multiplication table, rows a, columns b, entries compose(a,b),
    // all 1-based indices into the lexicographic order.
    const int table[6][6] = {
        {1, 2, 3, 4, 5, 6}, {2, 1, 4, 3, 6, 5}, {3, 5, 1, 6, 2, 4},
        {4, 6, 2, 5, 1, 3}, {5, 3, 6, 1, 4, 2}, {6, 4, 5, 2, 3, 1},
    };
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(compose(s[size_t(a)], s[size_t(b)]) == s[size_t(table[a][b] - 1)]);

    CHECK(compose(perm("132"), perm("213")) == perm("231"));
    CHECK(compose(perm("213"), perm("132")) == perm("312")); // noncommutative
    CHECK_THROWS_AS(compose(perm("21"), perm("213")), std::invalid_argument);
}

TEST_CASE("inverses") {
    const auto s = s3();
    CHECK(inverse(s[3]) == s[4]); // the two 3-cycles invert each other
    CHECK(inverse(s[4]) == s[3]);
    for (int k : {0, 1, 2, 5}) CHECK(inverse(s[size_t(k)]) == s[size_t(k)]);
    for (const Permutation& p : all_permutations(5)) {
        CHECK(compose(p, inverse(p)).is_identity());
        CHECK(compose(inverse(p), p).is_identity());
    }
}

TEST_CASE("parity is a homomorphism onto {+1,-1}") {
    const auto s = s3();
    CHECK(parity(s[0]) == 1);
    CHECK(parity(s[1]) == -1);
    CHECK(parity(s[2]) == -1);
    CHECK(parity(s[3]) == 1);
    CHECK(parity(s[4]) == 1);
    CHECK(parity(s[5]) == -1);
    const auto group = all_permutations(4);
    for (const Permutation& a : group)
        for (const Permutation& b : group)
            CHECK(parity(compose(a, b)) == parity(a) * parity(b));
}

TEST_CASE("cycle types") {
    CHECK(cycle_type(Permutation::identity(3)).to_string() == "1,1,1");
    CHECK(cycle_type(perm("213")).to_string() == "2,1");
    CHECK(cycle_type(perm("231")).to_string() == "3");
    CHECK(cycle_type(perm("[2 1 4 3 5]")).to_string() == "2,2,1");
    CHECK(cycle_type(perm("[2 3 4 5 1]")).to_string() == "5");
    // cycle type is a class function: conjugation preserves it
    for (const Permutation& g : all_permutations(4)) {
        const Permutation p = perm("[2 1 4 3]");
        CHECK(cycle_type(compose(compose(inverse(g), p), g)) == cycle_type(p));
    }
}

TEST_CASE("transpositions") {
    CHECK(Permutation::transposition(3, 0, 2) == perm("321"));
    CHECK(Permutation::transposition(5, 1, 3) == perm("[1 4 3 2 5]"));
    CHECK(parity(Permutation::transposition(6, 2, 5)) == -1);
}

TEST_CASE("group enumeration is sorted and complete") {
    const auto group = all_permutations(4);
    REQUIRE(group.size() == 24);
    CHECK(group.front().is_identity());
    CHECK(std::is_sorted(group.begin(), group.end()));
    CHECK(std::adjacent_find(group.begin(), group.end()) == group.end());
    CHECK(all_permutations(1).size() == 1);
    CHECK(all_permutations(6).size() == 720);
}

TEST_CASE("conjugacy classes: order, sizes, representatives") {
    const auto classes3 = conjugacy_classes(3);
    REQUIRE(classes3.size() == 3);
    CHECK(classes3[0].type.to_string() == "1,1,1");
    CHECK(classes3[0].size == 1);
    CHECK(classes3[0].representative().is_identity());
    CHECK(classes3[1].type.to_string() == "2,1");
    CHECK(classes3[1].size == 3);
    CHECK(classes3[2].type.to_string() == "3");
    CHECK(classes3[2].size == 2);

    const auto classes5 = conjugacy_classes(5);
    REQUIRE(classes5.size() == 7);
    const char* types[] = {"1,1,1,1,1", "2,1,1,1", "2,2,1", "3,1,1", "3,2", "4,1", "5"};
    const int sizes[] = {1, 10, 15, 20, 20, 30, 24};
    Int total = 0;
    for (size_t k = 0; k < 7; ++k) {
        CHECK(classes5[k].type.to_string() == types[k]);
        CHECK(classes5[k].size == sizes[k]);
        CHECK(classes5[k].class_sum.size() == size_t(sizes[k]));
        CHECK(cycle_type(classes5[k].representative()) == classes5[k].type);
        total += classes5[k].size;
    }
    CHECK(total == factorial(5));
}

TEST_CASE("algebra elements: sparse exact arithmetic") {
    const auto s = s3();
    IntAlgebra x = IntAlgebra::single(s[0], Int(2));
    x.add_term(s[3], Int(-1));
    x.add_term(s[3], Int(1)); // cancels to zero, term must vanish
    CHECK(x.size() == 1);
    CHECK(x.coefficient(s[3]) == 0);
    CHECK(x.coefficient(s[0]) == 2);

    IntAlgebra y = IntAlgebra::single(s[1]) + IntAlgebra::single(s[2], Int(-3));
    CHECK((x + y).size() == 3);
    CHECK((y - y).is_zero());
    CHECK((y * Int(0)).is_zero());

    // convolution extends compose bilinearly
    IntAlgebra prod = algebra_multiply(IntAlgebra::single(s[1]), IntAlgebra::single(s[2]));
    CHECK(prod == IntAlgebra::single(s[3]));
    CHECK(algebra_multiply(x, IntAlgebra::unit(3)) == x);

    // involution is an anti-automorphism
    IntAlgebra a = IntAlgebra::single(s[3], Int(2)) + IntAlgebra::single(s[1], Int(5));
    IntAlgebra b = IntAlgebra::single(s[4], Int(-1)) + IntAlgebra::single(s[2], Int(7));
    CHECK(algebra_multiply(a, b).involution() ==
          algebra_multiply(b.involution(), a.involution()));
    CHECK(a.involution().coefficient(s[4]) == 2);
}
