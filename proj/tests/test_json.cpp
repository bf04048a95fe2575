#include <doctest.h>

#include <stdexcept>

#include "symrep/json_io.hpp"

using namespace symrep;

TEST_CASE("matrices serialize as nested arrays of decimal strings") {
    IntMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = -1;
    m(1, 1) = Int("123456789012345678901234567890"); // wider than any machine word
    const Json j = matrix_to_json(m);
    CHECK(j.size() == 2);
    CHECK(j[0][0] == "1");
    CHECK(j[0][1] == "-1");
    CHECK(j[1][0] == "0");
    CHECK(j[1][1] == "123456789012345678901234567890");
}

TEST_CASE("algebra elements round-trip") {
    IntAlgebra x;
    x.add_term(Permutation::parse("123"), Int(2));
    x.add_term(Permutation::parse("231"), Int("-100000000000000000000"));
    const Json j = algebra_to_json(x);
    CHECK(j.size() == 2);
    CHECK(algebra_from_json(j, 3) == x);

    CHECK(algebra_from_json(Json::array(), 3).is_zero());
    CHECK_THROWS_AS(algebra_from_json(j, 4), std::invalid_argument); // degree mismatch
}

TEST_CASE("g bundle document") {
    const IrrepBundle b = build_irrep_bundle(Partition::parse("2,1"));
    const Json j = g_bundle_to_json(b);
    CHECK(j.at("n") == 3);
    CHECK(j.at("partition") == "2,1");
    CHECK(j.at("dim") == 2);
    CHECK(j.at("scale") == "3");
    CHECK(j.at("gPrime") == Json::parse(R"([["1","0"],["0","1"]])"));
    CHECK(j.at("gPrimeInverse") == j.at("gPrime"));
}

TEST_CASE("representation dump document") {
    const IrrepBundle b = build_irrep_bundle(Partition::parse("2,1"));
    const Permutation p = Permutation::parse("213");
    const Json j = rep_dump_to_json(b, {rep_matrix(b, p)});
    CHECK(j.at("partition") == "2,1");
    REQUIRE(j.at("matrices").size() == 1);
    CHECK(j.at("matrices")[0].at("perm") == "[2 1 3]");
    CHECK(j.at("matrices")[0].at("x") == Json::parse(R"([["1","0"],["-1","-1"]])"));
}

TEST_CASE("character table document") {
    const Json j = character_table_to_json(character_table(3));
    CHECK(j.at("n") == 3);
    REQUIRE(j.at("classes").size() == 3);
    CHECK(j.at("classes")[0].at("cycleType") == "1,1,1");
    CHECK(j.at("classes")[0].at("size") == "1");
    CHECK(j.at("classes")[2].at("size") == "2");
    REQUIRE(j.at("rows").size() == 3);
    CHECK(j.at("rows")[1].at("partition") == "2,1");
    CHECK(j.at("rows")[1].at("chi") == Json::parse(R"(["2","0","-1"])"));
}

TEST_CASE("dumps are stable and end with a newline") {
    const Json j = g_bundle_to_json(build_irrep_bundle(Partition::parse("3")));
    const std::string once = dump_json(j);
    CHECK(once == dump_json(j));
    REQUIRE_FALSE(once.empty());
    CHECK(once.back() == '\n');
    // fixed key order: n before partition before dim
    CHECK(once.find("\"n\"") < once.find("\"partition\""));
    CHECK(once.find("\"partition\"") < once.find("\"dim\""));
}
