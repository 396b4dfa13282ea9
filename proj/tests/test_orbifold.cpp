#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckoid/orbifold.hpp"

using namespace heckoid;

namespace {

const HeckoidIndex m2n4 = HeckoidIndex::from_two_n(4);   // n = 2
const HeckoidIndex m2n6 = HeckoidIndex::from_two_n(6);   // n = 3
const HeckoidIndex m2n3 = HeckoidIndex::from_two_n(3);   // n = 3/2
const HeckoidIndex m2n5 = HeckoidIndex::from_two_n(5);   // n = 5/2

i64 weight_of(const OrbifoldDescriptor& d, EdgeLabel label) {
    for (const auto& e : d.edges)
        if (e.label == label && !e.weight.infinite) return e.weight.value;
    return -1;
}

int count_label(const OrbifoldDescriptor& d, EdgeLabel label, bool infinite) {
    int n = 0;
    for (const auto& e : d.edges)
        if (e.label == label && e.weight.infinite == infinite) ++n;
    return n;
}

}  // namespace

TEST_CASE("even orbifold descriptor") {
    OrbifoldDescriptor d = even_orbifold_desc(Slope::of(2, 9), m2n4);
    CHECK(d.base_link_slope == Slope::of(2, 9));
    CHECK(d.kind == OrbifoldCase::even_heckoid);
    CHECK(weight_of(d, EdgeLabel::tau_minus) == 2);
    CHECK(count_label(d, EdgeLabel::link_component, true) == 2);
    CHECK(d.strata_count == 1);
    CHECK(d.vertex_condition_ok());

    OrbifoldDescriptor knot3 = even_orbifold_desc(Slope::of(1, 3), m2n6);
    CHECK(weight_of(knot3, EdgeLabel::tau_minus) == 3);

    // two-component case (even denominator)
    OrbifoldDescriptor link = even_orbifold_desc(Slope::of(1, 2), m2n4);
    CHECK(link.vertex_condition_ok());

    CHECK_THROWS_AS(even_orbifold_desc(Slope::of(2, 9), m2n5), wrong_parity_error);
}

TEST_CASE("quotient orbifold descriptor") {
    OrbifoldDescriptor d = quotient_orbifold_desc(Slope::of(2, 9), m2n4);
    CHECK(weight_of(d, EdgeLabel::tau_plus) == 2);
    CHECK(weight_of(d, EdgeLabel::tau_minus) == 4);
    CHECK(count_label(d, EdgeLabel::J, true) == 1);
    CHECK(count_label(d, EdgeLabel::J2, false) == 3);
    CHECK(d.vertex_condition_ok());

    OrbifoldDescriptor d5 = quotient_orbifold_desc(Slope::of(9, 56), m2n5);
    CHECK(weight_of(d5, EdgeLabel::tau_minus) == 5);
    CHECK(d5.vertex_condition_ok());
}

TEST_CASE("odd orbifold slope change") {
    CHECK(odd_orbifold_base_slope(Slope::of(2, 9)) == Slope::of(1, 9));
    CHECK(odd_orbifold_base_slope(Slope::of(9, 56)) == Slope::of(9, 28));
    CHECK(odd_orbifold_base_slope(Slope::of(1, 3)) == Slope::of(2, 3));
}

TEST_CASE("odd orbifold descriptors") {
    OrbifoldDescriptor knot = odd_orbifold_desc(Slope::of(2, 9), m2n3);
    CHECK(knot.kind == OrbifoldCase::odd_knot);
    CHECK(knot.base_link_slope == Slope::of(1, 9));
    CHECK(weight_of(knot, EdgeLabel::tau_minus) == 3);
    CHECK(count_label(knot, EdgeLabel::J1, true) == 1);
    CHECK(count_label(knot, EdgeLabel::J2, false) == 1);
    CHECK(knot.strata_count == 2);
    CHECK(knot.vertex_condition_ok());

    OrbifoldDescriptor link = odd_orbifold_desc(Slope::of(9, 56), m2n3);
    CHECK(link.kind == OrbifoldCase::odd_link);
    CHECK(link.base_link_slope == Slope::of(9, 28));
    CHECK(weight_of(link, EdgeLabel::tau_plus) == 2);
    CHECK(weight_of(link, EdgeLabel::tau_minus) == 3);
    CHECK(count_label(link, EdgeLabel::J1, true) == 2);
    CHECK(count_label(link, EdgeLabel::J2, false) == 2);
    CHECK(link.strata_count == 4);
    CHECK(link.vertex_condition_ok());

    CHECK_THROWS_AS(odd_orbifold_desc(Slope::of(2, 9), m2n4), wrong_parity_error);
}

TEST_CASE("slope-change denominators across all small reduced slopes") {
    for (i64 p = 2; p <= 100; ++p)
        for (i64 q = 1; q < p; ++q) {
            if (gcd_nonneg(q, p) != 1) continue;
            Slope rhat = odd_orbifold_base_slope(Slope::of(q, p));
            if (p % 2 == 1) {
                REQUIRE(rhat.den == p);
                REQUIRE(rhat.in_unit_interval());
            } else {
                // q/(p/2) stays reduced with half the denominator but can
                // exceed 1 (the link is unchanged by integer slope shifts).
                REQUIRE(rhat.den == p / 2);
                REQUIRE(rhat.num > 0);
                REQUIRE(rhat.num < 2 * rhat.den);
            }
        }
}

TEST_CASE("vertex condition on every emitted descriptor") {
    for (i64 m : {3, 5, 7}) {
        HeckoidIndex idx = HeckoidIndex::from_two_n(m);
        for (i64 p = 2; p <= 20; ++p)
            for (i64 q = 1; q < p; ++q) {
                if (gcd_nonneg(q, p) != 1) continue;
                REQUIRE(odd_orbifold_desc(Slope::of(q, p), idx).vertex_condition_ok());
                REQUIRE(quotient_orbifold_desc(Slope::of(q, p), idx).vertex_condition_ok());
            }
    }
    for (i64 two_n : {4, 6, 8}) {
        HeckoidIndex idx = HeckoidIndex::from_two_n(two_n);
        for (i64 p = 2; p <= 20; ++p)
            for (i64 q = 1; q < p; ++q) {
                if (gcd_nonneg(q, p) != 1) continue;
                REQUIRE(even_orbifold_desc(Slope::of(q, p), idx).vertex_condition_ok());
            }
    }
}

TEST_CASE("descriptor operations reject slopes outside (0,1)") {
    CHECK_THROWS_AS(even_orbifold_desc(Slope::of(3, 2), m2n4), std::domain_error);
    CHECK_THROWS_AS(odd_orbifold_desc(Slope::infinity(), m2n3), std::domain_error);
    CHECK_THROWS_AS(quotient_orbifold_desc(Slope::integer(0), m2n4), std::domain_error);
}
