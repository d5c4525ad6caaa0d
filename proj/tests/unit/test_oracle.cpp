#include "doctest.h"

#include "support/fixtures.hpp"
#include "tropnull/error.hpp"
#include "tropnull/oracle.hpp"

using namespace tropnull;
using testing::fn;
using testing::pt;

TEST_CASE("samples are deterministic and inside the box") {
    const oracle::SampleSet a = oracle::make_samples(2, 50, 3, 10);
    const oracle::SampleSet b = oracle::make_samples(2, 50, 3, 10);
    CHECK(a.points == b.points);
    for (const Point& p : a.points) {
        for (const Rational& v : p) CHECK(abs(v) <= 10);
    }
    CHECK(oracle::make_samples(2, 50, 4, 10).points != a.points);
}

TEST_CASE("sampled equality") {
    const oracle::SampleSet s = oracle::make_samples(1, 200, 1);
    const TropFunction sq = trop_pow(fn(1, "0:1 ; 0:0"), 2);
    CHECK_FALSE(oracle::eval_equal_sampled(sq, fn(1, "0:2 ; 0:0"), s));
    const auto bad = oracle::eval_equal_sampled(sq, fn(1, "0:2 ; 1:0"), s);
    REQUIRE(bad);
    CHECK(bad->lhs.value != bad->rhs.value);
}

TEST_CASE("grid criterion matches the exact check on small cases") {
    const TropFunction f = fn(1, "0:2 ; 1:1 ; 2:0");
    const TropFunction g = fn(1, "0:1 ; 1:0");
    CHECK(oracle::criterion_by_sampling(f, {g}, IdealFlavor::Standard).member);
    CHECK_FALSE(oracle::criterion_by_sampling(fn(1, "0:1 ; 0:0"), {g}, IdealFlavor::Standard).member);
    CHECK_FALSE(oracle::criterion_by_sampling(fn(1, "0:0"), {fn(1, "0:1")}, IdealFlavor::Standard).member);
    CHECK(oracle::criterion_by_sampling(fn(1, "0:0"), {fn(1, "0:1")}, IdealFlavor::Laurent).member);
    const Verdict r = oracle::criterion_by_sampling(fn(1, "0:1"), {fn(1, "0:1"), g}, IdealFlavor::Restricted);
    CHECK_FALSE(r.member);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].generator == std::size_t{1});
}

TEST_CASE("grid criterion in the plane") {
    const TropFunction line = fn(2, "0:1 0 ; 0:0 1 ; 0:0 0");
    const Verdict v = oracle::criterion_by_sampling(line, {line}, IdealFlavor::Standard);
    CHECK(v.member);
    CHECK(v.regions.regions.size() == 3);
    CHECK(oracle::sampling_radius(line, {line}, 20) >= 20);
}

TEST_CASE("grid criterion refuses n > 2") {
    CHECK_THROWS_AS(oracle::criterion_by_sampling(fn(3, "0:1 0 0"), {fn(3, "0:1 0 0")}, IdealFlavor::Standard),
                    Error);
}
