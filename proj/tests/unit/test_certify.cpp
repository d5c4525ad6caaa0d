#include "doctest.h"

#include "support/certificate_search.hpp"
#include "support/fixtures.hpp"
#include "tropnull/certify.hpp"
#include "tropnull/error.hpp"

using namespace tropnull;
using testing::fn;
using testing::pt;

TEST_CASE("certificate for max(2x, x+1, 2) over max(x, 1)") {
    const TropFunction f = fn(1, "0:2 ; 1:1 ; 2:0");
    const TropFunction g = fn(1, "0:1 ; 1:0");
    const Verdict v = check_standard(f, {g});
    CHECK(explicit_m_bound(f, {g}, v) == 2);
    const SynthesisResult r = synthesize_detailed(f, {g}, v);
    CHECK(r.escalations == 0);
    CHECK(r.certificate.m == 2);
    CHECK(r.certificate.J == std::vector<std::size_t>{0});
    CHECK(r.certificate.cofactors[0] == fn(1, "3:0 ; 0:3"));
    CHECK(r.report.passed());
    CHECK(r.report.symbolic_equal);
    CHECK(r.report.sampled_points_checked == 1000);

    // F itself already equals max(x, 1) ⊙ max(x, 1), so m = 1 suffices.
    const auto small = testing::certificate_at(f, {g}, 1, IdealFlavor::Standard);
    REQUIRE(small);
    CHECK(verify(f, {g}, *small).passed());
}

TEST_CASE("a wrong certificate is rejected with a witness") {
    const TropFunction f = fn(1, "0:2 ; 1:1 ; 2:0");
    const TropFunction g = fn(1, "0:1 ; 1:0");
    const Certificate bad{1, IdealFlavor::Standard, {0}, {fn(1, "0:0")}};
    const VerificationReport r = verify(f, {g}, bad);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.symbolic_equal);
    REQUIRE(r.first_discrepancy);
    CHECK(eval(f, r.first_discrepancy->point).value != eval(g, r.first_discrepancy->point).value);
}

TEST_CASE("structural checks") {
    const TropFunction x = fn(1, "0:1");
    const TropFunction x1 = fn(1, "0:1 ; 1:0");
    const Certificate unordered{1, IdealFlavor::Standard, {1, 0}, {fn(1, "0:0"), fn(1, "0:0")}};
    CHECK_FALSE(verify(x, {x, x1}, unordered).passed());
    const Certificate weak{1, IdealFlavor::Standard, {0}, {fn(1, "0:0", "laurent")}};
    CHECK_FALSE(verify(x, {x}, weak).passed());
    // Restricted certificates must use every generator.
    const Certificate partial{1, IdealFlavor::Restricted, {0}, {fn(1, "0:0")}};
    CHECK_FALSE(verify(x, {x, x1}, partial).passed());
}

TEST_CASE("restricted certificates pad unused generators") {
    const TropFunction f = fn(1, "0:2 ; 1:1 ; 2:0");
    const TropFunction g = fn(1, "0:1 ; 1:0");
    const std::vector<TropFunction> gens{g, fn(1, "0:1")};
    const Verdict v = check_restricted(f, gens);
    REQUIRE(v.member);
    const Certificate c = synthesize(f, gens, v);
    CHECK(c.J == std::vector<std::size_t>{0, 1});
    CHECK(verify(f, gens, c).passed());
}

TEST_CASE("Laurent certificate for max(x2, 0) over x1") {
    const TropFunction f = fn(2, "0:0 1 ; 0:0 0", "laurent");
    const TropFunction g = fn(2, "0:1 0", "laurent");
    const Verdict v = check_laurent(f, {g});
    REQUIRE(v.member);
    const Certificate c = synthesize(f, {g}, v);
    CHECK(c.m == 1);
    CHECK(c.cofactors[0] == canonicalize(fn(2, "0:-1 1 ; 0:-1 0", "laurent")));
    CHECK(verify(f, {g}, c).passed());

    const LaurentShift sh = laurent_shift(f, {g});
    CHECK(check_standard(sh.f, sh.gens).member);
    const Certificate back = unshift(sh, synthesize(sh.f, sh.gens, check_standard(sh.f, sh.gens)), IdealFlavor::Laurent);
    CHECK(verify(f, {g}, back).passed());
}

TEST_CASE("extended certificate carries a ghost cofactor term") {
    const TropFunction f = fn(1, "0:1 ; 0v:0", "poly", "T");
    const TropFunction g = fn(1, "0:1 ; 0:0", "poly", "T");
    const Certificate c = synthesize(f, {g}, check_extended(f, {g}));
    CHECK(c.m == 2);
    CHECK(c.cofactors[0] == fn(1, "0v:0 ; 0:1", "poly", "T"));
    const VerificationReport r = verify(f, {g}, c);
    CHECK(r.passed());
    CHECK(r.cells_checked > 0);

    // Swapping the ghost onto the x term breaks the tags at x = 0.
    const Certificate wrong{2, IdealFlavor::Extended, {0}, {fn(1, "0:0 ; 0v:1", "poly", "T")}};
    CHECK_FALSE(verify(f, {g}, wrong).passed());
}

TEST_CASE("escalation past the bound") {
    const TropFunction f = fn(3, "5:1 0 4 ; -2:2 1 3 ; -17/4:4 0 0 ; -9/2:2 2 2");
    const std::vector<TropFunction> gens{fn(3, "-4:2 3 3 ; 7/3:2 3 4 ; -7/2:0 4 1 ; 2/3:1 1 1 ; -9/2:3 4 1"),
                                         fn(3, "4:2 2 1 ; -3/2:1 1 2 ; -19/4:0 0 1 ; 2:0 1 0"), f};
    const Verdict v = check_standard(f, gens);
    REQUIRE(v.member);
    const SynthesisResult r = synthesize_detailed(f, gens, v);
    CHECK(r.bound == 5);
    CHECK(r.escalations == 1);
    CHECK(r.certificate.m == 10);
    CHECK(r.report.passed());
    CHECK_THROWS_AS(synthesize(f, gens, v, 0), Error);
    try {
        synthesize(f, gens, v, 0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EscalationExhausted);
        CHECK_FALSE(e.is_input_error());
    }
}

TEST_CASE("non-members have no certificate") {
    const TropFunction f = fn(1, "0:1 ; 0:0");
    const TropFunction g = fn(1, "0:1 ; 1:0");
    CHECK_THROWS_AS(synthesize(f, {g}, check_standard(f, {g})), Error);
    for (long m = 1; m <= 8; ++m) CHECK_FALSE(testing::certificate_at(f, {g}, m, IdealFlavor::Standard));
}
