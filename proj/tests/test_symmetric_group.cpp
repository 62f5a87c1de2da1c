#include <doctest.h>

#include <numeric>
#include <random>

#include "glpcount/symmetric_group.hpp"
#include "glpcount/verification.hpp"

using namespace glp;

TEST_CASE("partition generation and canonical order") {
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(7).size() == 15);
    CHECK(partitions_of(8).size() == 22);
    auto parts = partitions_of(7);
    // the canonical order is the table order
    const char* expected[] = {"7",     "61",    "52",   "51^2", "43",  "421", "41^3", "3^21",
                              "32^2",  "321^2", "31^4", "2^31", "2^21^3", "21^5", "1^7"};
    for (size_t i = 0; i < parts.size(); ++i) CHECK(format_exponent(parts[i]) == expected[i]);
    CHECK(std::is_sorted(parts.begin(), parts.end(),
                         [](const Partition& a, const Partition& b) { return a < b; }));
}

TEST_CASE("cycle type parsing") {
    CHECK(format_dotted(parse_cycle_type("2.2.1.1.1")) == "2.2.1.1.1");
    CHECK(parse_cycle_type("1x7") == parse_cycle_type("1.1.1.1.1.1.1"));
    CHECK(parse_cycle_type("2.1x5") == parse_cycle_type("1.2.1.1.1.1"));  // sorted canonical
    CHECK_THROWS_AS(parse_cycle_type(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycle_type("2..1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycle_type("abc"), std::invalid_argument);
}

TEST_CASE("class sizes") {
    CHECK(class_size(parse_cycle_type("1x7")) == 1);
    CHECK(class_size(parse_cycle_type("7")) == 720);
    auto parts = partitions_of(7);
    std::uint64_t total = 0;
    for (const auto& p : parts) total += class_size(p);
    CHECK(total == 5040);
}

TEST_CASE("character values: trivial, sign, and a hook dimension") {
    auto parts7 = partitions_of(7);
    Partition trivial({7});
    Partition sign_rep(std::vector<int>(7, 1));
    for (const auto& lambda : parts7) {
        CHECK(character(trivial, lambda) == 1);
        int parity = (7 - lambda.size()) % 2 == 0 ? 1 : -1;
        CHECK(character(sign_rep, lambda) == parity);
    }
    CHECK(character(Partition({6, 1}), Partition(std::vector<int>(7, 1))) == 6);
}

TEST_CASE("hook length dimensions for S_7") {
    CHECK(hook_dimension(Partition({7})) == 1);
    CHECK(hook_dimension(Partition({6, 1})) == 6);
    CHECK(hook_dimension(Partition({5, 2})) == 14);
    CHECK(hook_dimension(Partition({4, 3})) == 14);
    CHECK(hook_dimension(Partition({4, 2, 1})) == 35);
    CHECK(hook_dimension(Partition(std::vector<int>(7, 1))) == 1);
    // dims of all irreducibles square-sum to the group order
    std::uint64_t sum = 0;
    for (const auto& mu : partitions_of(7)) {
        std::uint64_t d = hook_dimension(mu);
        sum += d * d;
    }
    CHECK(sum == 5040);
}

TEST_CASE("orthogonality for m up to 8") {
    for (int m = 2; m <= 8; ++m) {
        CharacterTable t = build_character_table(m);
        size_t n = t.partitions.size();
        BigInt order = factorial(m);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a; b < n; ++b) {
                BigInt acc = 0;
                for (size_t c = 0; c < n; ++c)
                    acc += BigInt(t.class_sizes[c]) * t.values[a][c] * t.values[b][c];
                CHECK(acc == (a == b ? order : BigInt(0)));
            }
        // identity column is the hook dimension
        int id_col = t.index_of(Partition(std::vector<int>(m, 1)));
        for (size_t r = 0; r < n; ++r)
            CHECK(t.values[r][id_col] == static_cast<std::int64_t>(hook_dimension(t.partitions[r])));
    }
}

TEST_CASE("murnaghan-nakayama matches the permutation-module oracle") {
    for (int m = 2; m <= 4; ++m) {
        CharacterTable mn = build_character_table(m);
        CharacterTable oracle = glp::verify::brute_force_character_table(m);
        REQUIRE(mn.partitions == oracle.partitions);
        CHECK(mn.values == oracle.values);
    }
}

TEST_CASE("decompose recovers known class functions") {
    CharacterTable t = build_character_table(7);
    size_t n = t.partitions.size();
    // regular representation: m! at the identity, 0 elsewhere
    std::vector<BigInt> regular(n, 0);
    regular[t.index_of(Partition(std::vector<int>(7, 1)))] = 5040;
    Decomposition d = decompose(t, regular);
    REQUIRE(d.integral());
    auto mults = d.integer_multiplicities();
    for (size_t r = 0; r < n; ++r) CHECK(mults[r] == BigInt(hook_dimension(t.partitions[r])));
    // all-ones class function is the trivial character
    std::vector<BigInt> ones(n, 1);
    Decomposition dt = decompose(t, ones);
    REQUIRE(dt.integral());
    auto tm = dt.integer_multiplicities();
    for (size_t r = 0; r < n; ++r)
        CHECK(tm[r] == (t.partitions[r] == Partition({7}) ? 1 : 0));
}

TEST_CASE("decompose of built class functions is the identity") {
    CharacterTable t = build_character_table(6);
    size_t n = t.partitions.size();
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BigInt> mult(n);
        for (auto& v : mult) v = rng() % 7;
        std::vector<BigInt> values(n, 0);
        for (size_t c = 0; c < n; ++c)
            for (size_t r = 0; r < n; ++r) values[c] += mult[r] * t.values[r][c];
        Decomposition d = decompose(t, values);
        REQUIRE(d.integral());
        CHECK(d.nonnegative());
        CHECK(d.integer_multiplicities() == mult);
    }
}

TEST_CASE("decompose flags non-characters") {
    CharacterTable t = build_character_table(7);
    std::vector<BigInt> values(t.partitions.size(), 0);
    values[0] = 1;  // 1 at the class of 7-cycles, 0 elsewhere: not a character
    Decomposition d = decompose(t, values);
    CHECK_FALSE(d.integral());
    CHECK_THROWS_AS(d.integer_multiplicities(), std::logic_error);
}
