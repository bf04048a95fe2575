#include <doctest.h>

#include <vector>

#include "symrep/irrep.hpp"
#include "symrep/partition.hpp"

using namespace symrep;

namespace {

IrrepBundle bundle(const std::string& text) {
    return build_irrep_bundle(Partition::parse(text));
}

} // namespace

TEST_CASE("bundle basics for degree 3") {
    const IrrepBundle top = bundle("3");
    CHECK(top.dim == 1);
    CHECK(top.scale == 6);
    CHECK(top.g_reduced == IntMatrix::identity(1));

    const IrrepBundle mid = bundle("2,1");
    CHECK(mid.dim == 2);
    CHECK(mid.scale == 3);
    CHECK(mid.g_reduced == IntMatrix::identity(2));
    CHECK(mid.g_unreduced() == IntMatrix::identity(2) * Int(3));
    CHECK(mid.tableau(0).to_string() == "1 2/3");
    CHECK(mid.tableau(1).to_string() == "1 3/2");
    CHECK(mid.sigma(0, 1) == Permutation::parse("132"));

    const IrrepBundle bottom = bundle("1,1,1");
    CHECK(bottom.dim == 1);
    CHECK(bottom.scale == 6);
}

TEST_CASE("degree-3 projector coordinates: the frozen 6x6 table") {
    // Rows: the single projector of shape (3); the four of shape (2,1) in
    // row-major index order (1,1),(1,2),(2,1),(2,2); the single one of
    // shape (1,1,1). Columns: the six permutations in lexicographic order.
    const int table[6][6] = {
        {1, 1, 1, 1, 1, 1},    //
        {1, 0, 1, 0, -1, -1},  //
        {0, 1, -1, -1, 1, 0},  //
        {0, 1, 0, 1, -1, -1},  //
        {1, 0, -1, -1, 0, 1},  //
        {1, -1, -1, 1, 1, -1}, //
    };
    const auto perms = all_permutations(3);
    const IrrepBundle shapes[] = {bundle("3"), bundle("2,1"), bundle("1,1,1")};
    int row = 0;
    for (const auto& b : shapes)
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j, ++row) {
                const IntAlgebra expanded = projector_expand(b, i, j);
                for (int col = 0; col < 6; ++col) {
                    CHECK(expanded.coefficient(perms[size_t(col)]) == table[row][col]);
                    // the O(n) coordinate routine agrees with the expansion
                    CHECK(projector_coordinate(b, i, j, perms[size_t(col)]) == table[row][col]);
                }
            }
    CHECK(row == 6);
}

TEST_CASE("coordinate routine vs brute-force expansion, exhaustive degree 4") {
    for (const auto& shape : partitions(4)) {
        const IrrepBundle b = build_irrep_bundle(shape);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j) {
                const IntAlgebra expanded = projector_expand(b, i, j);
                for (const Permutation& s : all_permutations(4))
                    CHECK(projector_coordinate(b, i, j, s) == expanded.coefficient(s));
            }
    }
}

TEST_CASE("expansions factor uniquely through the two subgroups") {
    for (const auto& shape : partitions(4)) {
        const IrrepBundle b = build_irrep_bundle(shape);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j) {
                const size_t cols = column_antisymmetrizer(b.tableau(i)).size();
                const size_t rows = row_symmetrizer(b.tableau(j)).size();
                const IntAlgebra expanded = projector_expand(b, i, j);
                CHECK(expanded.size() == cols * rows);
                for (const auto& [p, c] : expanded.terms()) CHECK((c == 1 || c == -1));
            }
    }
    const auto all = expand_all_projectors(bundle("2,1"));
    REQUIRE(all.size() == 4);
    CHECK(all[1] == projector_expand(bundle("2,1"), 0, 1));
}

TEST_CASE("projector product relations") {
    // p_ij * p_kl = scale * g'(j,k) * p_il, exhaustive over index quadruples
    for (const char* text : {"2,1", "2,2", "3,1", "2,1,1"}) {
        const IrrepBundle b = bundle(text);
        const auto all = expand_all_projectors(b);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                for (int k = 0; k < b.dim; ++k)
                    for (int l = 0; l < b.dim; ++l) {
                        const IntAlgebra lhs =
                            algebra_multiply(all[size_t(i * b.dim + j)],
                                             all[size_t(k * b.dim + l)]);
                        const IntAlgebra rhs =
                            all[size_t(i * b.dim + l)] * (b.scale * b.g_reduced(j, k));
                        CHECK(lhs == rhs);
                    }
    }
    // spot check at the first shape with a non-diagonal g
    const IrrepBundle b = bundle("3,2");
    const IntAlgebra p40 = projector_expand(b, 4, 0);
    const IntAlgebra p01 = projector_expand(b, 0, 1);
    CHECK(algebra_multiply(p40, p01) ==
          projector_expand(b, 4, 1) * (b.scale * b.g_reduced(0, 0)));
    CHECK(algebra_multiply(p01, p40) ==
          projector_expand(b, 0, 0) * (b.scale * b.g_reduced(1, 4)));
}

TEST_CASE("products across different shapes vanish") {
    const auto shapes3 = partitions(3);
    for (size_t a = 0; a < shapes3.size(); ++a)
        for (size_t c = 0; c < shapes3.size(); ++c) {
            if (a == c) continue;
            const IrrepBundle ba = build_irrep_bundle(shapes3[a]);
            const IrrepBundle bc = build_irrep_bundle(shapes3[c]);
            for (int i = 0; i < ba.dim; ++i)
                for (int j = 0; j < ba.dim; ++j)
                    for (int k = 0; k < bc.dim; ++k)
                        for (int l = 0; l < bc.dim; ++l)
                            CHECK(algebra_multiply(projector_expand(ba, i, j),
                                                   projector_expand(bc, k, l))
                                      .is_zero());
        }
    // one degree-4 pair
    CHECK(algebra_multiply(projector_expand(bundle("3,1"), 0, 0),
                           projector_expand(bundle("2,2"), 0, 0))
              .is_zero());
}

TEST_CASE("dual family is the involution with transposed indices") {
    for (const auto& shape : partitions(3)) {
        const IrrepBundle b = build_irrep_bundle(shape);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                CHECK(projector_expand(b, i, j).involution() ==
                      projector_expand_dual(b, j, i));
    }
}

TEST_CASE("g structure for all shapes through degree 6") {
    for (int n = 1; n <= 6; ++n) {
        const Int fact = factorial(n);
        for (const auto& shape : partitions(n)) {
            const IrrepBundle b = build_irrep_bundle(shape);
            CHECK(b.g_reduced.is_lower_triangular());
            CHECK(b.g_reduced.has_unit_diagonal());
            CHECK((b.g_reduced * b.g_reduced_inverse).is_identity());
            CHECK((b.g_reduced_inverse * b.g_reduced).is_identity());
            CHECK(b.scale * b.dim == fact);
            CHECK(b.dim == dimension(shape));
            for (int r = 0; r < b.dim; ++r)
                for (int c = 0; c < b.dim; ++c) {
                    const Int v = b.g_reduced(r, c);
                    CHECK((v == 0 || v == 1 || v == -1));
                }
            // identity coordinates read g' transposed
            CHECK(coordinate_matrix(b, Permutation::identity(n)) ==
                  b.g_reduced.transpose());
        }
    }
}

TEST_CASE("first non-diagonal g appears at degree 5, shape (3,2)") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : partitions(n))
            CHECK(build_irrep_bundle(shape).g_reduced.is_diagonal());

    const char* nondiagonal[] = {"3,2", "2,2,1"};
    const char* diagonal[] = {"5", "4,1", "3,1,1", "2,1,1,1", "1,1,1,1,1"};
    for (const char* text : nondiagonal) CHECK_FALSE(bundle(text).g_reduced.is_diagonal());
    for (const char* text : diagonal) CHECK(bundle(text).g_reduced.is_diagonal());

    // the lone off-diagonal entry of the first non-diagonal g
    const IrrepBundle b = bundle("3,2");
    IntMatrix expected = IntMatrix::identity(5);
    expected(4, 0) = -1;
    CHECK(b.g_reduced == expected);
}

TEST_CASE("frozen g matrix at degree 7, shape (3,2,2)") {
    const IrrepBundle b = bundle("3,2,2");
    REQUIRE(b.dim == 21);
    CHECK(b.scale == 240);

    // all fourteen off-diagonal entries; the inverse mirrors them negated
    const int entries[14][3] = {
        {12, 0, -1}, {13, 0, 1},  {14, 1, -1}, {15, 1, 1},  {16, 0, 1},
        {16, 1, 1},  {17, 1, -1}, {18, 2, 1},  {18, 4, 1},  {19, 3, 1},
        {19, 6, 1},  {20, 3, -1}, {20, 8, 1},  {20, 10, -1},
    };
    IntMatrix expected = IntMatrix::identity(21);
    IntMatrix expected_inverse = IntMatrix::identity(21);
    for (const auto& e : entries) {
        expected(e[0], e[1]) = e[2];
        expected_inverse(e[0], e[1]) = -e[2];
    }
    CHECK(b.g_reduced == expected);
    CHECK(b.g_reduced_inverse == expected_inverse);
    CHECK((b.g_reduced * b.g_reduced_inverse).is_identity());

    // brute-force revalidation of a few frozen coordinates: the identity
    // coefficient of the expanded product p_ij equals g'(j,i)
    const Permutation e7 = Permutation::identity(7);
    CHECK(projector_expand(b, 0, 12).coefficient(e7) == -1);
    CHECK(projector_expand(b, 1, 16).coefficient(e7) == 1);
    CHECK(projector_expand(b, 10, 20).coefficient(e7) == -1);
    CHECK(projector_expand(b, 0, 11).coefficient(e7) == 0);
}

TEST_CASE("every inverse g stays reduced through degree 7; degree 8 breaks") {
    for (int n = 5; n <= 7; ++n)
        for (const auto& shape : partitions(n)) {
            const IrrepBundle b = build_irrep_bundle(shape);
            for (int r = 0; r < b.dim; ++r)
                for (int c = 0; c < b.dim; ++c) {
                    const Int v = b.g_reduced_inverse(r, c);
                    CHECK((v >= -1 && v <= 1));
                }
        }

    // first shape whose inverse leaves {-1,0,+1}
    const IrrepBundle b = bundle("3,3,2");
    REQUIRE(b.dim == 42);
    CHECK((b.g_reduced * b.g_reduced_inverse).is_identity());
    Int worst = 0;
    for (int r = 0; r < b.dim; ++r)
        for (int c = 0; c < b.dim; ++c) {
            Int v = b.g_reduced_inverse(r, c);
            if (v < 0) v = -v;
            if (v > worst) worst = v;
        }
    CHECK(worst == 2);
}
