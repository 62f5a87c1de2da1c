#include <doctest.h>

#include "glpcount/polynomials.hpp"
#include "glpcount/twisted_enumeration.hpp"

using namespace glp;

namespace {

CountOptions quick() {
    CountOptions o;
    o.threads = 2;
    return o;
}

}  // namespace

TEST_CASE("feasibility estimates") {
    CHECK(feasibility_estimate(7, parse_cycle_type("7"), 3, false) == 4785157);
    CHECK(feasibility_estimate(7, parse_cycle_type("1x7"), 19, true) == 55306341);
    CHECK(feasibility_estimate(7, parse_cycle_type("7"), 7, false) == BigInt("678223896393"));
    CHECK_THROWS_AS(feasibility_estimate(7, parse_cycle_type("7"), 3, true), std::invalid_argument);
}

TEST_CASE("infeasible jobs are refused with the estimate") {
    try {
        count_twisted(7, parse_cycle_type("7"), 7, GeneralityCondition::glp(7), quick());
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK(e.estimate == BigInt("678223896393"));
        CHECK(e.budget == 10'000'000'000ULL);
    }
}

TEST_CASE("bad jobs are rejected") {
    auto glp7 = GeneralityCondition::glp(7);
    CHECK_THROWS_AS(count_twisted(7, parse_cycle_type("5.3"), 3, glp7, quick()),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_twisted(7, parse_cycle_type("7"), 4, glp7, quick()),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_twisted(7, parse_cycle_type("7"), 2, glp7, quick()),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_frame_normalized(7, parse_cycle_type("4.3"), 3, glp7, quick()),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_twisted(3, parse_cycle_type("1.1.1"), 3, GeneralityCondition::glp(3),
                                  quick()),
                    std::invalid_argument);
}

TEST_CASE("all of PGL acts simply transitively on frames: m=4 quotients are 1") {
    auto glp4 = GeneralityCondition::glp(4);
    for (std::int64_t p : {3, 5}) {
        for (const auto& lambda : partitions_of(4)) {
            CAPTURE(format_dotted(lambda));
            CAPTURE(p);
            CountRecord twisted = count_twisted(4, lambda, p, glp4, quick());
            CHECK(twisted.quotient_count == 1);
            CHECK(twisted.raw_fixed_count == pgl_order(p));
            if (frame_eligible(lambda)) {
                CountRecord frame = count_frame_normalized(4, lambda, p, glp4, quick());
                CHECK(frame.quotient_count == 1);
            }
        }
    }
}

TEST_CASE("five points up to projectivity: (q-2)(q-3) rational configurations") {
    auto glp5 = GeneralityCondition::glp(5);
    CycleType id5 = parse_cycle_type("1x5");
    for (std::int64_t q : {3, 5, 7, 11}) {
        CountRecord frame = count_frame_normalized(5, id5, q, glp5, quick());
        CHECK(frame.quotient_count == (q - 2) * (q - 3));
    }
    // the full enumeration agrees where cheap
    CountRecord twisted = count_twisted(5, id5, 5, glp5, quick());
    CHECK(twisted.quotient_count == 6);
}

TEST_CASE("reference engine agrees with the table-driven kernels") {
    for (std::int64_t p : {3, 5}) {
        auto glp4 = GeneralityCondition::glp(4);
        for (const auto& lambda : partitions_of(4)) {
            CAPTURE(format_dotted(lambda));
            CAPTURE(p);
            CountRecord fast = count_twisted(4, lambda, p, glp4, quick());
            CountRecord reference = count_twisted_reference(4, lambda, p, glp4, quick());
            CHECK(fast.raw_fixed_count == reference.raw_fixed_count);
            CHECK(fast.quotient_count == reference.quotient_count);
        }
    }
    auto glp5 = GeneralityCondition::glp(5);
    for (const char* cls : {"1x5", "2.1.1.1", "2.2.1", "3.1.1", "3.2", "4.1", "5"}) {
        CAPTURE(cls);
        CycleType lambda = parse_cycle_type(cls);
        CountRecord fast = count_twisted(5, lambda, 3, glp5, quick());
        CountRecord reference = count_twisted_reference(5, lambda, 3, glp5, quick());
        CHECK(fast.raw_fixed_count == reference.raw_fixed_count);
    }
    // one seven-point class whose tree collapses immediately
    CountRecord fast7 = count_twisted(7, parse_cycle_type("1x7"), 3,
                                      GeneralityCondition::glp(7), quick());
    CountRecord ref7 = count_twisted_reference(7, parse_cycle_type("1x7"), 3,
                                               GeneralityCondition::glp(7), quick());
    CHECK(fast7.raw_fixed_count == 0);
    CHECK(ref7.raw_fixed_count == 0);
}

TEST_CASE("frame path equals full enumeration where both run") {
    auto glp7 = GeneralityCondition::glp(7);
    for (const char* cls : {"2.1.1.1.1.1", "3.1.1.1.1", "1x7"}) {
        CAPTURE(cls);
        CycleType lambda = parse_cycle_type(cls);
        CountRecord frame = count_frame_normalized(7, lambda, 3, glp7, quick());
        CountRecord twisted = count_twisted(7, lambda, 3, glp7, quick());
        CHECK(frame.quotient_count == twisted.quotient_count);
        CHECK(frame.raw_fixed_count == twisted.raw_fixed_count);
    }
}

TEST_CASE("spot checks against the embedded count polynomials") {
    auto glp7 = GeneralityCondition::glp(7);
    CHECK(count_twisted(7, parse_cycle_type("2.2.1.1.1"), 3, glp7, quick()).quotient_count == 24);
    CHECK(count_frame_normalized(7, parse_cycle_type("3.1.1.1.1"), 3, glp7, quick())
              .quotient_count == 432);
    CHECK(count_frame_normalized(7, parse_cycle_type("1x7"), 5, glp7, quick()).quotient_count == 0);
    CHECK(count_frame_normalized(7, parse_cycle_type("1x7"), 7, glp7, quick()).quotient_count ==
          120);
}

TEST_CASE("counts are independent of the cycle processing order") {
    CountOptions desc = quick();
    CountOptions asc = quick();
    asc.layout = CountOptions::Layout::Ascending;
    auto glp6 = GeneralityCondition::glp(6);
    CycleType lambda = parse_cycle_type("3.2.1");
    CountRecord a = count_twisted(6, lambda, 3, glp6, desc);
    CountRecord b = count_twisted(6, lambda, 3, glp6, asc);
    CHECK(a.raw_fixed_count == b.raw_fixed_count);
}

TEST_CASE("worker count does not change the counts") {
    auto glp7 = GeneralityCondition::glp(7);
    CycleType lambda = parse_cycle_type("5.2");
    CountOptions one = quick();
    one.threads = 1;
    CountOptions four = quick();
    four.threads = 4;
    CountRecord a = count_twisted(7, lambda, 3, glp7, one);
    CountRecord b = count_twisted(7, lambda, 3, glp7, four);
    CHECK(a.raw_fixed_count == b.raw_fixed_count);
    CHECK(a.quotient_count == b.quotient_count);
}

TEST_CASE("eight-point condition counts zero where five rational points are forced") {
    auto gp8 = GeneralityCondition::gp8();
    CountRecord frame = count_frame_normalized(8, parse_cycle_type("1x8"), 3, gp8, quick());
    CHECK(frame.quotient_count == 0);
    CountRecord twisted = count_twisted(8, parse_cycle_type("1x8"), 3, gp8, quick());
    CHECK(twisted.raw_fixed_count == 0);
}
