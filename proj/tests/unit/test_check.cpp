#include "doctest.h"

#include "support/fixtures.hpp"
#include "tropnull/check.hpp"
#include "tropnull/error.hpp"

using namespace tropnull;
using testing::fn;
using testing::pt;

namespace {

bool has_failure(const Verdict& v, FailureReason r) {
    for (const Failure& f : v.failures) {
        if (f.reason == r) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("gradient condition") {
    CHECK(condition_e1(pt({2}), pt({1})));
    CHECK(condition_e1(pt({0, 3}), pt({0, 1})));
    CHECK_FALSE(condition_e1(pt({0}), pt({1})));
    CHECK(condition_e1(pt({1}), pt({0})));
    CHECK_THROWS_AS(condition_e1(pt({1}), pt({1, 1})), Error);
}

TEST_CASE("max(2x, x+1, 2) lies over max(x, 1)") {
    const TropFunction f = fn(1, "0:2 ; 1:1 ; 2:0");
    const TropFunction g = fn(1, "0:1 ; 1:0");
    const Verdict v = check_standard(f, {g});
    CHECK(v.member);
    REQUIRE(v.assignments.size() == 2);
    CHECK(v.assignments[0].generator == 0);
    CHECK(v.assignments[0].generator_term.exponent == pt({0}));
    CHECK(v.assignments[1].generator_term.exponent == pt({1}));
    CHECK(check_restricted(f, {g}).member);
    CHECK(check_laurent(f, {g}).member);
}

TEST_CASE("a generator with a kink inside a region fails") {
    const Verdict v = check_standard(fn(1, "0:1 ; 0:0"), {fn(1, "0:1 ; 1:0")});
    CHECK_FALSE(v.member);
    REQUIRE(v.failures.size() == 1);
    CHECK(v.failures[0].reason == FailureReason::NoLinearGenerator);
    CHECK(v.regions.regions[*v.failures[0].region].exponent == pt({1}));
}

TEST_CASE("constants lie over x only in the Laurent flavor") {
    const TropFunction zero = fn(1, "0:0");
    const TropFunction x = fn(1, "0:1");
    const Verdict s = check_standard(zero, {x});
    CHECK_FALSE(s.member);
    CHECK(has_failure(s, FailureReason::GradientConditionFailed));
    CHECK(check_laurent(zero, {x}).member);
    CHECK(check_pl(zero, {x}).member);
}

TEST_CASE("restricted flavor needs every generator to fit") {
    const TropFunction x = fn(1, "0:1");
    const Verdict r = check_restricted(x, {x, fn(1, "0:1 ; 1:0")});
    CHECK_FALSE(r.member);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].reason == FailureReason::DilationFitFailed);
    CHECK(r.failures[0].generator == std::size_t{1});
    CHECK(check_standard(x, {x, fn(1, "0:1 ; 1:0")}).member);
}

TEST_CASE("generators are tried in order") {
    const TropFunction f = fn(1, "0:1");
    const Verdict v = check_standard(f, {fn(1, "5:1"), fn(1, "0:1")});
    REQUIRE(v.assignments.size() == 1);
    CHECK(v.assignments[0].generator == 0);
}

TEST_CASE("extended flavor tags") {
    // max(x, 0^nu) over max(x, 0): the ghost region needs a linear generator only.
    const TropFunction f = fn(1, "0:1 ; 0v:0", "poly", "T");
    const TropFunction g = fn(1, "0:1 ; 0:0", "poly", "T");
    const Verdict v = check_extended(f, {g});
    CHECK(v.member);
    REQUIRE(v.assignments.size() == 2);
    CHECK(v.assignments[0].tag_class == TagClass::PiNu);
    CHECK(v.assignments[1].tag_class == TagClass::Pi);

    const TagPartition p = partition_regions_T(f);
    CHECK(p.pi.size() == 1);
    CHECK(p.pi_nu.size() == 1);

    // A ghost generator cannot produce a real region.
    const Verdict w = check_extended(fn(1, "0:1", "poly", "T"), {fn(1, "0v:1", "poly", "T")});
    CHECK_FALSE(w.member);
    CHECK(has_failure(w, FailureReason::TagClassMismatch));
}

TEST_CASE("input validation") {
    const TropFunction x = fn(1, "0:1");
    CHECK_THROWS_AS(check_standard(x, {}), Error);
    CHECK_THROWS_AS(check_standard(x, {fn(2, "0:1 0")}), Error);
    CHECK_THROWS_AS(check_standard(fn(1, "0:-1", "laurent"), {x}), Error);
    CHECK_THROWS_AS(check_laurent(fn(1, "0:1/2", "pl"), {x}), Error);
    CHECK_THROWS_AS(check_standard(fn(1, "0:1", "poly", "T"), {fn(1, "0:1", "poly", "T")}), Error);
    CHECK_THROWS_AS(check_extended(x, {x}), Error);
    try {
        check_standard(x, {});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyInput);
        CHECK(e.is_input_error());
    }
}

TEST_CASE("flavor names") {
    CHECK(parse_ideal_flavor("restricted") == IdealFlavor::Restricted);
    CHECK_FALSE(parse_ideal_flavor("bogus"));
    CHECK(cofactor_flavor(IdealFlavor::Laurent) == Flavor::Laurent);
    CHECK(cofactor_flavor(IdealFlavor::Pl) == Flavor::Plq);
    CHECK(cofactor_flavor(IdealFlavor::Restricted) == Flavor::Poly);
}
