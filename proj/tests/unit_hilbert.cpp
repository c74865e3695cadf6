// Hilbert functions, the stabilized Hilbert polynomial constant, deficiency
// and the numerical invariants, checked against closed forms and Bezout.
#include <catch_amalgamated.hpp>

#include "support/examples.hpp"

using namespace fiberscope;

TEST_CASE("hilbert function of the full ring and of monomial ideals") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    auto Z = Ideal<Rationals>::zero(Q, ctx);
    for (int t = 0; t <= 6; ++t)
        REQUIRE(hilbert_function(Z, t) == (t + 1) * (t + 2) / 2); // dim of R_t in 3 vars

    // R/(X1) is a polynomial ring in two variables
    Ideal<Rationals> I(Q, ctx, {X1});
    for (int t = 0; t <= 6; ++t) REQUIRE(hilbert_function(I, t) == t + 1);

    // complement rule: hilbert_function + ideal_graded_dim = dim R_t
    Ideal<Rationals> J(Q, ctx, {X1 * X2 - X3 * X3, X2 * X2 * X3});
    for (int t = 0; t <= 8; ++t)
        REQUIRE(hilbert_function(J, t) + ideal_graded_dim(J, t) == (t + 1) * (t + 2) / 2);
}

TEST_CASE("hilbert polynomial constant recovers Bezout degrees") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    // complete intersection of a conic and a cubic: degree 6
    Ideal<Rationals> I(Q, ctx, {X1 * X1 - X2 * X3, X2.pow(3) + X3.pow(3)});
    REQUIRE(hilbert_polynomial_constant(I) == 6);
    // three non-collinear points
    Ideal<Rationals> P(Q, ctx, {X1 * X2, X2 * X3, X1 * X3});
    REQUIRE(hilbert_polynomial_constant(P) == 3);
    // unit ideal: empty scheme
    auto unit = Ideal<Rationals>(Q, ctx, {Polynomial<Rationals>::constant(Q, ctx, Q.one())});
    REQUIRE(hilbert_polynomial_constant(unit) == 0);
}

TEST_CASE("initial degree") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1);
    Ideal<Rationals> I(Q, ctx, {X1.pow(3), X1 * X2.pow(2)});
    REQUIRE(initial_degree(I) == 3);
    Ideal<Rationals> J(Q, ctx, {X1 * X1});
    REQUIRE(initial_degree(J) == 2);
}

TEST_CASE("deficiency vanishes for saturated ideals and counts the gap otherwise") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    auto m = irrelevant_ideal(Q, ctx);
    // a point with an embedded irrelevant component
    Ideal<Rationals> I(Q, ctx, {X1 * X1, X1 * X2, X2 * X2, X1 * X3, X2 * X3});
    auto sat = saturate(I, m); // = (X1, X2), a single reduced point
    REQUIRE(sat.equals(Ideal<Rationals>(Q, ctx, {X1, X2})));
    // deficiency of the saturated ideal is zero in every degree
    for (int t = 0; t <= 4; ++t) REQUIRE(deficiency(sat, t) == 0);
    // HF of R/I at degree 1 is 3 but the saturation has HF 1: gap of 2
    REQUIRE(hilbert_function(I, 1) - hilbert_function(sat, 1) == 2);
}

TEST_CASE("hilbert table reports stabilization") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    Ideal<Rationals> P(Q, ctx, {X1 * X2, X2 * X3, X1 * X3});
    auto g = hilbert_table(P, 0, 6);
    REQUIRE(g.table.at(0) == 1);
    REQUIRE(g.table.at(2) == 3);
    REQUIRE(g.stabilization.has_value());
}

TEST_CASE("numerical invariants on the worked degree-3 instance") {
    Rationals Q;
    auto phi = fsx::example2(Q);
    auto inv = nml_invariants(phi.ideal(), phi.d, NmlInvariants::Route::closed_form);
    REQUIRE(inv.degP == 6);
    REQUIRE(inv.n == 0);
    REQUIRE(inv.m == 3);
    REQUIRE(inv.l == 3);
    REQUIRE(inv.n - inv.m + inv.l == 0);
}

TEST_CASE("numerical invariants on the degree-6 instance") {
    Rationals Q;
    auto phi = fsx::example1(Q);
    auto inv = nml_invariants(phi.ideal(), phi.d, NmlInvariants::Route::closed_form);
    REQUIRE(inv.degP == 24);
    REQUIRE(inv.n == 24 - 21);
    REQUIRE(inv.m == 24 - 6);
    REQUIRE(inv.l == 15);
    REQUIRE(inv.n - inv.m + inv.l == 0);
}
