#include <doctest.h>

#include "glpcount/purity_pipeline.hpp"
#include "glpcount/verification.hpp"

using namespace glp;

TEST_CASE("character extraction from the builtin polynomials") {
    const auto& polys = builtin_table1();
    // degree 0: every row is monic
    auto chi0 = extract_character(polys, 0, 6);
    for (const auto& v : chi0) CHECK(v == 1);
    // degree 1 at the identity class and at class 52
    auto chi1 = extract_character(polys, 1, 6);
    auto classes = partitions_of(7);
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i] == parse_cycle_type("1x7")) CHECK(chi1[i] == 28);
        if (classes[i] == parse_cycle_type("5.2")) CHECK(chi1[i] == 0);
    }
}

TEST_CASE("cohomology table matches the reference data") {
    CohomologyResult result = cohomology_table(builtin_table1(), 7, 6);
    REQUIRE(result.ok());
    const auto& expected = glp::verify::reference_table2();
    for (int k = 0; k <= 6; ++k)
        for (int i = 0; i < 15; ++i) CHECK(result.table->mult[k][i] == expected[k][i]);
}

TEST_CASE("round trip is the identity on the builtin data") {
    CohomologyResult result = cohomology_table(builtin_table1(), 7, 6);
    REQUIRE(result.ok());
    auto rebuilt = round_trip(*result.table);
    CHECK(rebuilt == builtin_table1());
}

TEST_CASE("a table with only trivial H^0 rebuilds to q^d") {
    CohomologyTable table;
    table.m = 7;
    table.d = 6;
    table.partitions = partitions_of(7);
    table.mult.assign(7, std::vector<BigInt>(15, 0));
    table.mult[0][0] = 1;  // trivial representation sits first in canonical order
    auto polys = round_trip(table);
    for (const auto& [lambda, poly] : polys) {
        CHECK(poly.degree() == 6);
        CHECK(poly.coefficient(6) == 1);
        for (int k = 0; k < 6; ++k) CHECK(poly.coefficient(k) == 0);
    }
}

TEST_CASE("unordered space Poincare numbers") {
    CohomologyResult result = cohomology_table(builtin_table1(), 7, 6);
    REQUIRE(result.ok());
    auto inv = unordered_poincare(*result.table);
    REQUIRE(inv.size() == 7);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == 0);
    CHECK(inv[4] == 3);
    CHECK(inv[6] == 2);
}

TEST_CASE("perturbed polynomials fail loudly with a structured diagnostic") {
    auto polys = builtin_table1();
    auto& row = polys[parse_cycle_type("5.2")];
    row.coeffs[2] += 1;
    CohomologyResult result = cohomology_table(polys, 7, 6);
    CHECK_FALSE(result.ok());
    REQUIRE_FALSE(result.problems.empty());
    bool has_nonintegral = false;
    for (const auto& p : result.problems)
        if (p.reason == "non-integral") has_nonintegral = true;
    CHECK(has_nonintegral);
}

TEST_CASE("missing classes are rejected") {
    auto polys = builtin_table1();
    polys.erase(parse_cycle_type("5.2"));
    CHECK_THROWS_AS(cohomology_table(polys, 7, 6), std::invalid_argument);
}
