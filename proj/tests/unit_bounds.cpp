// Bound certificates, the dimension identity and the liaison cross-checks.
#include <catch_amalgamated.hpp>

#include "support/examples.hpp"

using namespace fiberscope;

TEST_CASE("closed-form bound values") {
    REQUIRE(theorem_bound(3) == 4);
    REQUIRE(theorem_bound(4) == 7);
    REQUIRE(theorem_bound(5) == 9);
    REQUIRE(theorem_bound(6) == 17);
    REQUIRE(theorem_bound(7) == 20);
    REQUIRE_THROWS(theorem_bound(2));
}

TEST_CASE("saturation-indeg certificate on the hand instance") {
    Rationals Q;
    auto phi = fsx::prop1_hand(Q);
    auto cert = prop1_certificate(phi, 2);
    REQUIRE(cert.has_value());
    REQUIRE(cert->s == 1);
    REQUIRE(cert->nu == 2);
    // the saturated ideal really is (X1^2, X2^2)
    auto ctx = phi.ctx;
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1);
    auto sat = saturate(phi.ideal(), irrelevant_ideal(Q, ctx));
    REQUIRE(sat.equals(Ideal<Rationals>(Q, ctx, {X1 * X1, X2 * X2})));
}

TEST_CASE("saturation-indeg certificate on the degree-6 instance") {
    Rationals Q;
    auto cert = prop1_certificate(fsx::example1(Q), 2);
    REQUIRE(cert.has_value());
    REQUIRE(cert->s == 2);
    REQUIRE(cert->nu == 8);
}

TEST_CASE("theorem verdict on the degree-3 instance") {
    Rationals Q;
    auto v = verify_main_theorem(fsx::example2(Q), 5);
    REQUIRE(v.applicable);
    REQUIRE(v.certificate.value == 4);
    REQUIRE(v.certificate.observed_sum == 4);
    REQUIRE(v.certificate.satisfied == true);
}

TEST_CASE("dimension identity values") {
    Rationals Q;
    SECTION("degree-6 instance, s = 1 gives 3") {
        auto [lhs, rhs] = prop17_check(fsx::example1(Q), 1);
        REQUIRE(lhs == rhs);
        REQUIRE(lhs == 3);
    }
    SECTION("degree-3 instance, s = 1") {
        auto [lhs, rhs] = prop17_check(fsx::example2(Q), 1);
        REQUIRE(lhs == rhs);
        REQUIRE(lhs >= 0);
    }
}

TEST_CASE("liaison on the degree-3 instance") {
    Rationals Q;
    auto r = liaison_check(fsx::example2(Q), 11);
    REQUIRE(r.degP == 6);
    REQUIRE(r.degQ == 3);
    REQUIRE(r.hf == std::vector<long>{1, 3, 3, 3});
    REQUIRE(r.all_ok());
}

TEST_CASE("liaison on the family member d=4") {
    Rationals Q;
    auto r = liaison_check(fsx::example4(Q, 4), 11);
    REQUIRE(r.degP == 11);
    REQUIRE(r.degQ == 5);
    REQUIRE(r.sum_identity);
    REQUIRE(r.all_ok());
}
