#include <doctest.h>

#include <stdexcept>

#include "symrep/tableaux.hpp"

using namespace symrep;

namespace {

Partition shape(const std::string& text) { return Partition::parse(text); }

} // namespace

TEST_CASE("partitions: validation, text form, enumeration order") {
    CHECK(shape("3,2,2").n() == 7);
    CHECK(shape("3,2,2").rows() == 3);
    CHECK(shape("3,2,2").to_string() == "3,2,2");
    CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);

    const auto parts3 = partitions(3);
    REQUIRE(parts3.size() == 3);
    CHECK(parts3[0].to_string() == "3");
    CHECK(parts3[1].to_string() == "2,1");
    CHECK(parts3[2].to_string() == "1,1,1");
    CHECK(partitions(7).size() == 15);
    CHECK(partitions(9).size() == 30);

    CHECK(shape("3,2,2").conjugate().to_string() == "3,3,1");
    CHECK(shape("3,3,2").conjugate().to_string() == "3,3,2"); // self-conjugate
    CHECK(shape("4").conjugate().to_string() == "1,1,1,1");

    CHECK(factorial(6) == 720);
    CHECK(factorial(0) == 1);
    CHECK(shape("2,1").symmetry_factor() == 2); // class size 3!/2 = 3
    CHECK(shape("5").symmetry_factor() == 5);
}

TEST_CASE("standard tableaux: enumeration, order, dimensions") {
    const auto two_one = standard_tableaux(shape("2,1"));
    REQUIRE(two_one.size() == 2);
    CHECK(two_one[0].to_string() == "1 2/3");
    CHECK(two_one[1].to_string() == "1 3/2");

    const auto tabs = standard_tableaux(shape("3,2"));
    REQUIRE(tabs.size() == 5);
    for (size_t k = 0; k + 1 < tabs.size(); ++k)
        CHECK(tabs[k].reading_sequence() < tabs[k + 1].reading_sequence());
    for (const auto& t : tabs) CHECK(t.is_standard());

    CHECK(dimension(shape("2,1")) == 2);
    CHECK(dimension(shape("1,1,1")) == 1);
    CHECK(dimension(shape("3,2,2")) == 21);
    CHECK(dimension(shape("3,3,2")) == 42);
    CHECK(shape("3,2,2").hook_dimension() == 21);

    for (int n = 1; n <= 6; ++n) {
        Int sum = 0;
        for (const auto& p : partitions(n)) {
            Int m = dimension(p);
            sum += m * m;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("tableau parsing and fillings") {
    const StandardTableau t = StandardTableau::parse(shape("2,1"), "1 3/2");
    CHECK(t.to_string() == "1 3/2");
    CHECK_THROWS_AS(StandardTableau::parse(shape("2,1"), "2 1/3"), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau::parse(shape("2,1"), "1 2/3 4"), std::invalid_argument);

    // fillings carry arbitrary symbol placements (0-based internally)
    const TableauFilling f(shape("2,1"), {{1, 2}, {0}});
    CHECK_FALSE(f.is_standard());
    CHECK(f.symbol(0, 1) == 2);
    CHECK(f.row_of(0) == 1);
    CHECK(f.col_of(2) == 1);
    CHECK(f.reading_sequence() == std::vector<int>{1, 2, 0});
    CHECK(f.to_string() == "2 3/1");

    // relabel replaces symbols in place: cells stay put
    const TableauFilling g = f.relabel(Permutation::parse("231"));
    CHECK(g == TableauFilling(shape("2,1"), {{2, 0}, {1}}));

    CHECK_THROWS_AS(TableauFilling(shape("2,1"), {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(TableauFilling(shape("2,1"), {{0, 0}, {2}}), std::invalid_argument);
}

TEST_CASE("intertwiners relabel one tableau onto another") {
    for (const auto& p : partitions(5)) {
        const auto tabs = standard_tableaux(p);
        const int m = int(tabs.size());
        for (int i = 0; i < m; ++i) {
            CHECK(intertwiner(tabs[size_t(i)], tabs[size_t(i)]).is_identity());
            for (int j = 0; j < m; ++j)
                CHECK(tabs[size_t(i)].relabel(intertwiner(tabs[size_t(i)], tabs[size_t(j)])) ==
                      tabs[size_t(j)]);
        }
    }
    // chain rule over a full triple sweep at one shape
    const auto tabs = standard_tableaux(shape("3,2"));
    for (const auto& a : tabs)
        for (const auto& b : tabs)
            for (const auto& c : tabs)
                CHECK(compose(intertwiner(a, b), intertwiner(b, c)) == intertwiner(a, c));

    CHECK_THROWS_AS(
        intertwiner(standard_tableaux(shape("2,1"))[0], standard_tableaux(shape("3"))[0]),
        std::invalid_argument);
}

TEST_CASE("row symmetrizers and column antisymmetrizers") {
    const StandardTableau t = StandardTableau::parse(shape("2,1"), "1 2/3");
    const IntAlgebra p = row_symmetrizer(t);
    CHECK(p.size() == 2);
    CHECK(p.coefficient(Permutation::identity(3)) == 1);
    CHECK(p.coefficient(Permutation::parse("213")) == 1);

    const IntAlgebra n = column_antisymmetrizer(t);
    CHECK(n.size() == 2);
    CHECK(n.coefficient(Permutation::identity(3)) == 1);
    CHECK(n.coefficient(Permutation::parse("321")) == -1);

    // two nontrivial rows and two nontrivial columns
    const StandardTableau sq = StandardTableau::parse(shape("2,2"), "1 2/3 4");
    const IntAlgebra psq = row_symmetrizer(sq);
    const IntAlgebra nsq = column_antisymmetrizer(sq);
    CHECK(psq.size() == 4);
    CHECK(nsq.size() == 4);
    CHECK(psq.coefficient(Permutation::parse("[2 1 4 3]")) == 1);
    CHECK(nsq.coefficient(Permutation::parse("[3 4 1 2]")) == 1); // two signed columns
    CHECK(nsq.coefficient(Permutation::parse("[3 2 1 4]")) == -1);

    // projections: h*P = P for h in the row group, N*v = parity(v)*N
    CHECK(algebra_multiply(IntAlgebra::single(Permutation::parse("213")), p) == p);
    CHECK(algebra_multiply(n, IntAlgebra::single(Permutation::parse("321"))) == n * Int(-1));
}

TEST_CASE("ordering lemma: vanishing direction and the surviving witness") {
    // For standard tableaux a < b of one shape, both words through the pair
    // (row group of a, column group of b) are zero.
    for (int n : {4, 5}) {
        for (const auto& p : partitions(n)) {
            const auto tabs = standard_tableaux(p);
            for (size_t a = 0; a < tabs.size(); ++a)
                for (size_t b = a + 1; b < tabs.size(); ++b) {
                    CHECK(algebra_multiply(row_symmetrizer(tabs[a]),
                                           column_antisymmetrizer(tabs[b]))
                              .is_zero());
                    CHECK(algebra_multiply(column_antisymmetrizer(tabs[b]),
                                           row_symmetrizer(tabs[a]))
                              .is_zero());
                }
        }
    }
    // The reversed word does not vanish in general: first surviving pair.
    const auto tabs = standard_tableaux(shape("3,2"));
    CHECK_FALSE(algebra_multiply(row_symmetrizer(tabs[4]), column_antisymmetrizer(tabs[0]))
                    .is_zero());
    CHECK_FALSE(algebra_multiply(column_antisymmetrizer(tabs[0]), row_symmetrizer(tabs[4]))
                    .is_zero());
}
