#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "glpcount/generality.hpp"

using namespace glp;

namespace {

ProjectivePoint rational_pt(const ExtensionField& f, std::int64_t x, std::int64_t y, std::int64_t z) {
    return make_point(from_residue(f, x), from_residue(f, y), from_residue(f, z));
}

std::vector<ProjectivePoint> random_distinct(const std::vector<ProjectivePoint>& pool, size_t n,
                                             std::mt19937& rng) {
    std::set<size_t> used;
    std::vector<ProjectivePoint> out;
    while (out.size() < n) {
        size_t i = rng() % pool.size();
        if (used.insert(i).second) out.push_back(pool[i]);
    }
    return out;
}

}  // namespace

TEST_CASE("glp partial checks") {
    auto f = construct_field(7, 1);
    auto cond = GeneralityCondition::glp(7);
    CHECK(check_partial(cond, {}));
    CHECK(check_partial(cond, {rational_pt(*f, 1, 0, 0), rational_pt(*f, 0, 1, 0)}));
    CHECK_FALSE(check_partial(
        cond, {rational_pt(*f, 1, 0, 0), rational_pt(*f, 0, 1, 0), rational_pt(*f, 1, 1, 0)}));
    // repeated point fails distinctness
    CHECK_FALSE(check_partial(cond, {rational_pt(*f, 1, 0, 0), rational_pt(*f, 1, 0, 0)}));
    // five points of a conic form an arc
    std::vector<ProjectivePoint> arc;
    for (std::int64_t t = 0; t < 5; ++t) arc.push_back(rational_pt(*f, 1, t, (t * t) % 7));
    CHECK(check_partial(cond, arc));
    // full check equals partial check for glp
    arc.push_back(rational_pt(*f, 0, 0, 1));
    arc.push_back(rational_pt(*f, 1, 5, 25 % 7));
    REQUIRE(arc.size() == 7);
    CHECK(check_full(cond, arc) == check_partial(cond, arc));
}

TEST_CASE("glp verdict is stable under permutations") {
    auto f = construct_field(5, 1);
    auto pool = collect_points(*f, 1);
    auto cond = GeneralityCondition::glp(7);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto pts = random_distinct(pool, 5, rng);
        bool verdict = check_partial(cond, pts);
        for (int s = 0; s < 5; ++s) {
            std::shuffle(pts.begin(), pts.end(), rng);
            CHECK(check_partial(cond, pts) == verdict);
        }
    }
}

TEST_CASE("failing partial tuples cannot be rescued by extension") {
    auto f = construct_field(5, 1);
    auto pool = collect_points(*f, 1);
    auto cond = GeneralityCondition::glp(7);
    std::mt19937 rng(17);
    int failing_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto pts = random_distinct(pool, 4, rng);
        if (check_partial(cond, pts)) continue;
        ++failing_seen;
        for (const auto& ext : pool) {
            auto extended = pts;
            extended.push_back(ext);
            CHECK_FALSE(check_partial(cond, extended));
        }
    }
    CHECK(failing_seen > 0);
}

TEST_CASE("gp8 rejects octuples on a nodal cubic with a point at the node") {
    auto f = construct_field(11, 1);
    std::vector<ProjectivePoint> pts;
    pts.push_back(rational_pt(*f, 0, 0, 1));
    for (std::int64_t t : {0, 2, 3, 4, 5, 6, 7})
        pts.push_back(rational_pt(*f, (t * t - 1 + 11) % 11, (t * (t * t - 1) % 11 + 11) % 11, 1));
    auto cond = GeneralityCondition::gp8();
    CHECK_FALSE(check_full(cond, pts));
}

TEST_CASE("an octuple in general position over F_19") {
    // found by randomized search with backtracking; octuples in general
    // position do not exist over F_9, F_11 or F_13 (exhaustive search for
    // F_9, frame-normalized counts for the others), so q=19 is the witness
    auto f = construct_field(19, 1);
    std::vector<ProjectivePoint> pts{
        rational_pt(*f, 1, 0, 14),  rational_pt(*f, 1, 10, 10), rational_pt(*f, 1, 12, 15),
        rational_pt(*f, 1, 18, 18), rational_pt(*f, 1, 6, 1),   rational_pt(*f, 1, 11, 14),
        rational_pt(*f, 1, 3, 8),   rational_pt(*f, 1, 10, 2)};
    auto cond = GeneralityCondition::gp8();
    CHECK(check_partial(cond, pts));
    CHECK(check_full(cond, pts));
    for (int i = 0; i < 8; ++i) CHECK_FALSE(singular_cubic_through(pts, i));
}

TEST_CASE("glp octuples over F_11 mostly avoid singular cubics") {
    auto f = construct_field(11, 1);
    auto pool = collect_points(*f, 1);
    auto glp8 = GeneralityCondition::glp(8);
    std::mt19937 rng(29);
    int built = 0, cubic_free = 0;
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<ProjectivePoint> pts;
        bool stuck = false;
        while (pts.size() < 8 && !stuck) {
            bool extended = false;
            for (int tries = 0; tries < 80 && !extended; ++tries) {
                pts.push_back(pool[rng() % pool.size()]);
                if (check_partial(glp8, pts)) extended = true;
                else pts.pop_back();
            }
            stuck = !extended;
        }
        if (stuck) continue;
        ++built;
        bool all_false = true;
        for (int i = 0; i < 8; ++i)
            if (singular_cubic_through(pts, i)) all_false = false;
        if (all_false) ++cubic_free;
    }
    CHECK(built >= 5);
    CHECK(cubic_free >= 1);  // the predicate is not identically true
}

TEST_CASE("gp8 is impossible over F_3") {
    // any five rational points of PG(2,3) contain a collinear triple, so
    // every octuple already fails the partial check
    auto f = construct_field(3, 1);
    auto pool = collect_points(*f, 1);
    auto cond = GeneralityCondition::gp8();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto pts = random_distinct(pool, 8, rng);
        CHECK_FALSE(check_full(cond, pts));
    }
}

TEST_CASE("condition parsing") {
    CHECK(parse_condition("glp", 7).name() == "glp");
    CHECK(parse_condition("gp8", 8).name() == "gp8");
    CHECK_THROWS_AS(parse_condition("gp8", 7), std::invalid_argument);
    CHECK_THROWS_AS(parse_condition("nope", 7), std::invalid_argument);
    CHECK_THROWS_AS(GeneralityCondition::glp(2), std::invalid_argument);
}
