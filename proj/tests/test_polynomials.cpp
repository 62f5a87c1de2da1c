#include <doctest.h>

#include "glpcount/polynomials.hpp"

using namespace glp;

TEST_CASE("builtin table evaluations") {
    const auto& t = builtin_table1();
    REQUIRE(t.size() == 15);
    CHECK(evaluate(t.at(parse_cycle_type("7")), 3) == 847);
    CHECK(evaluate(t.at(parse_cycle_type("1x7")), 3) == 0);
    CHECK(evaluate(t.at(parse_cycle_type("1x7")), 5) == 0);
    CHECK(evaluate(t.at(parse_cycle_type("1x7")), 7) == 120);
    CHECK(evaluate(t.at(parse_cycle_type("3.3.1")), 3) == 306);
    CHECK(evaluate(t.at(parse_cycle_type("2.2.1.1.1")), 3) == 24);
    CHECK(evaluate(t.at(parse_cycle_type("3.1.1.1.1")), 3) == 432);
    CHECK(evaluate(t.at(parse_cycle_type("2.1x5")), 3) == 0);
}

TEST_CASE("builtin table structure") {
    const auto& t = builtin_table1();
    // every row is monic of degree 6
    for (const auto& [lambda, poly] : t) {
        CHECK(poly.degree() == 6);
        CHECK(poly.coefficient(6) == 1);
    }
    // four rows are the identical polynomial
    const auto& base = t.at(parse_cycle_type("4.3"));
    CHECK(t.at(parse_cycle_type("3.2.2")) == base);
    CHECK(t.at(parse_cycle_type("3.2.1.1")) == base);
    CHECK(t.at(parse_cycle_type("3.1.1.1.1")) == base);
    // specific rows quoted from the table
    CHECK(format_polynomial(t.at(parse_cycle_type("6.1"))) == "q^6 + q^5 + q^4 - q^2");
    CHECK(format_polynomial(base) == "q^6 - q^5 - q^4 + q^3");
}

TEST_CASE("interpolation recovers known polynomials") {
    // q^6 through 7 primes
    std::vector<std::pair<std::int64_t, BigInt>> samples;
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19}) {
        BigInt v = 1;
        for (int i = 0; i < 6; ++i) v *= p;
        samples.emplace_back(p, v);
    }
    CountPolynomial poly = interpolate(samples, 6);
    CHECK(poly.coeffs == std::vector<BigInt>{0, 0, 0, 0, 0, 0, 1});

    // constant polynomial from constant samples
    std::vector<std::pair<std::int64_t, BigInt>> ones{{3, 1}, {5, 1}};
    CHECK(interpolate(ones, 0).coeffs == std::vector<BigInt>{1});

    // an embedded row from its own evaluations
    const auto& row = builtin_table1().at(parse_cycle_type("2.1x5"));
    std::vector<std::pair<std::int64_t, BigInt>> row_samples;
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19}) row_samples.emplace_back(p, evaluate(row, p));
    CHECK(interpolate(row_samples, 6) == row);
}

TEST_CASE("interpolation failure modes") {
    std::vector<std::pair<std::int64_t, BigInt>> few{{3, 1}, {5, 2}};
    CHECK_THROWS_AS(interpolate(few, 6), InterpolationError);

    // non-integer coefficients: a perturbed sample of a degree-1 polynomial
    std::vector<std::pair<std::int64_t, BigInt>> bad{{3, 3}, {5, 6}};  // slope 3/2
    CHECK_THROWS_AS(interpolate(bad, 1), InterpolationError);

    // inconsistent extra sample for the claimed degree bound
    std::vector<std::pair<std::int64_t, BigInt>> inconsistent{{3, 9}, {5, 25}, {7, 48}};
    CHECK_THROWS_AS(interpolate(inconsistent, 1), InterpolationError);

    std::vector<std::pair<std::int64_t, BigInt>> dup{{3, 9}, {3, 9}, {5, 25}};
    CHECK_THROWS_AS(interpolate(dup, 1), InterpolationError);
}

TEST_CASE("evaluation round-trips samples exactly") {
    const auto& row = builtin_table1().at(parse_cycle_type("2.2.2.1"));
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        BigInt v = evaluate(row, p);
        // interpolate through shifted sample sets and re-evaluate
        std::vector<std::pair<std::int64_t, BigInt>> samples;
        for (std::int64_t q : {3, 5, 7, 11, 13, 17, 19}) samples.emplace_back(q, evaluate(row, q));
        CHECK(evaluate(interpolate(samples, 6), p) == v);
    }
}
