#include "doctest.h"

#include "support/fixtures.hpp"
#include "tropnull/regions.hpp"

using namespace tropnull;
using testing::fn;
using testing::pt;

TEST_CASE("regions of max(2x, x+1, 2)") {
    // Breakpoints at x = 1 where all three terms tie; the middle term never dominates.
    const RegionDecomposition d = decompose(fn(1, "0:2 ; 1:1 ; 2:0"));
    REQUIRE(d.regions.size() == 2);
    CHECK(d.regions[0].exponent == pt({0}));
    CHECK(d.regions[1].exponent == pt({2}));
    CHECK(d.regions[0].interior_point[0] < 1);
    CHECK(d.regions[1].interior_point[0] > 1);
}

TEST_CASE("regions of a tropical line") {
    const RegionDecomposition d = decompose(fn(2, "0:1 0 ; 0:0 1 ; 0:0 0"));
    REQUIRE(d.regions.size() == 3);
    for (const Region& r : d.regions) CHECK(r.poly.contains(r.interior_point));
}

TEST_CASE("linearity on a region") {
    const TropFunction g = fn(1, "0:1 ; 0:0");  // max(x, 0)
    lp::Polyhedron left(1);
    left.add_greater(pt({-1}), 0);
    const auto on_left = linear_on(g, left);
    REQUIRE(on_left);
    CHECK(on_left->exponent == pt({0}));

    lp::Polyhedron around(1);
    around.add_greater(pt({1}), -1);
    around.add_greater(pt({-1}), -1);
    CHECK_FALSE(linear_on(g, around));
}

TEST_CASE("dominance and excess points") {
    const TropFunction a = fn(1, "0:2 ; 0:0");   // max(2x, 0)
    const TropFunction b = fn(1, "-1:1 ; -1:0");  // max(x, 0) - 1
    CHECK(dominates(a, b));
    CHECK_FALSE(dominates(b, a));
    const auto x = excess_point(b, a);
    REQUIRE(x);
    CHECK(eval(a, *x).value > eval(b, *x).value);
}

TEST_CASE("shift constants") {
    // The largest c with x + c <= max(2x, 2) everywhere is 1, attained at x = 1.
    CHECK(shift_constant(fn(1, "0:2 ; 2:0"), fn(1, "0:1")) == Rational(1));
    // x^2 can never sit under max(x, 0).
    CHECK_FALSE(shift_constant(fn(1, "0:1 ; 0:0"), fn(1, "0:2")));
    CHECK(concave_coefficient(fn(1, "0:2 ; 2:0"), pt({1})) == Rational(1));
}

TEST_CASE("amoeba membership") {
    const TropFunction f = fn(1, "0:1 ; 0:0");
    CHECK(on_amoeba(f, pt({0})));
    CHECK_FALSE(on_amoeba(f, pt({1})));
    CHECK_FALSE(on_amoeba(fn(2, "0:1 0"), pt({0, 0})));
}

TEST_CASE("amoeba of a tropical line in a box") {
    const BoundingBox box{-5, -5, 5, 5};
    const std::vector<Segment> segs = amoeba_segments_2d(fn(2, "0:1 0 ; 0:0 1 ; 0:0 0"), box);
    CHECK(segs.size() == 3);
    for (const Segment& s : segs) {
        const bool touches_vertex = s.from == pt({0, 0}) || s.to == pt({0, 0});
        CHECK(touches_vertex);
    }
}
