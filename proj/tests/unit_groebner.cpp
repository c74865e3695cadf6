// Buchberger and the ideal-theoretic toolbox, checked with the Buchberger
// criterion itself, hand-computable ideals, and containment certificates.
#include <catch_amalgamated.hpp>

#include "support/examples.hpp"

using namespace fiberscope;

namespace {

/// Independent check that G is a Groebner basis: every input reduces to zero
/// and every S-polynomial reduces to zero.
template <class F>
void check_buchberger_criterion(const std::vector<Polynomial<F>>& input,
                                const std::vector<Polynomial<F>>& G, const MonomialOrder& ord) {
    REQUIRE(!G.empty());
    const F& field = G[0].field();
    for (const auto& f : input) REQUIRE(normal_form(f, G, ord).is_zero());
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            auto lti = G[i].leading_term(ord);
            auto ltj = G[j].leading_term(ord);
            auto L = lcm(lti.first, ltj.first);
            auto s = G[i].scaled(field.inv(lti.second)).mono_multiple(quotient(L, lti.first)) -
                     G[j].scaled(field.inv(ltj.second)).mono_multiple(quotient(L, ltj.first));
            REQUIRE(normal_form(s, G, ord).is_zero());
        }
}

} // namespace

TEST_CASE("buchberger output satisfies the Buchberger criterion") {
    Rationals Q;
    auto phi = fsx::example2(Q);
    std::vector<Polynomial<Rationals>> input(phi.f.begin(), phi.f.end());
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
        auto G = buchberger(input, ord);
        check_buchberger_criterion(input, G, ord);
    }
}

TEST_CASE("reduced basis is canonical across generator orderings") {
    PrimeField F(101);
    auto ctx = make_x_context();
    auto X1 = fsx::var(F, ctx, 0), X2 = fsx::var(F, ctx, 1), X3 = fsx::var(F, ctx, 2);
    std::vector<Polynomial<PrimeField>> a{X1 * X1 - X2 * X3, X1 * X3 - X2 * X2,
                                          X2 * X3 - X1 * X2};
    auto b = a;
    std::reverse(b.begin(), b.end());
    auto ord = MonomialOrder::grevlex();
    REQUIRE(buchberger(a, ord) == buchberger(b, ord));
}

TEST_CASE("membership via normal form") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    Ideal<Rationals> I(Q, ctx, {X1 * X2, X2 * X3});
    REQUIRE(I.contains(X1 * X2 * X3 + X2 * X3 * X3));
    REQUIRE(!I.contains(X1 * X3));
    REQUIRE(!I.contains(X2));
}

TEST_CASE("colon and quotient ideals on hand examples") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    // (X1*X2, X2*X3) : X2 = (X1, X3)
    Ideal<Rationals> I(Q, ctx, {X1 * X2, X2 * X3});
    auto C = colon_by_element(I, X2);
    REQUIRE(C.equals(Ideal<Rationals>(Q, ctx, {X1, X3})));
    // quotient by an ideal: (X1^2*X3) : (X1) = (X1*X3)
    Ideal<Rationals> A(Q, ctx, {X1 * X1 * X3});
    Ideal<Rationals> B(Q, ctx, {X1});
    REQUIRE(ideal_quotient(A, B).equals(Ideal<Rationals>(Q, ctx, {X1 * X3})));
    // general property: g * (I : g) is contained in I
    for (const auto& g : C.groebner_basis(MonomialOrder::grevlex()))
        REQUIRE(I.contains(g * X2));
}

TEST_CASE("intersection of monomial ideals") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1);
    Ideal<Rationals> A(Q, ctx, {X1});
    Ideal<Rationals> B(Q, ctx, {X2});
    REQUIRE(ideal_intersection(A, B).equals(Ideal<Rationals>(Q, ctx, {X1 * X2})));
}

TEST_CASE("saturation strips embedded irrelevant components") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    auto m = irrelevant_ideal(Q, ctx);
    // (X1^2, X1*X2, X1*X3) = (X1) ∩ m^2-ish piece; saturation is (X1)
    Ideal<Rationals> I(Q, ctx, {X1 * X1, X1 * X2, X1 * X3});
    REQUIRE(saturate(I, m).equals(Ideal<Rationals>(Q, ctx, {X1})));
    // saturating an already saturated ideal is the identity
    Ideal<Rationals> J(Q, ctx, {X1 * X2 - X3 * X3});
    REQUIRE(saturate(J, m).equals(J));
    // the irrelevant ideal itself saturates to the unit ideal
    REQUIRE(saturate(m, m).is_unit());
}

TEST_CASE("ideal powers") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1);
    Ideal<Rationals> I(Q, ctx, {X1, X2});
    REQUIRE(ideal_power(I, 2).equals(
        Ideal<Rationals>(Q, ctx, {X1 * X1, X1 * X2, X2 * X2})));
    REQUIRE(ideal_power(I, 1).equals(I));
}

TEST_CASE("elimination computes the image of the mixed-context graph") {
    // eliminate X from (L0 - X1^2, L1 - X2^2) restricted to the graph of the
    // squaring map: the relation ideal must contain no X variables.
    Rationals Q;
    auto ctx = make_mixed_context();
    auto L0 = fsx::var(Q, ctx, 0), L1 = fsx::var(Q, ctx, 1);
    auto X1 = fsx::var(Q, ctx, 4), X2 = fsx::var(Q, ctx, 5);
    Ideal<Rationals> G(Q, ctx, {L0 * X2 - L1 * X1}); // bihomogeneous toy relation
    auto E = eliminate_x_block(G);
    for (const auto& g : E.generators())
        for (int v = ctx->x_begin(); v < ctx->nvars(); ++v) REQUIRE(!g.involves(v));
}

TEST_CASE("combinatorial dimension of the leading-term cone") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    REQUIRE(dimension(Ideal<Rationals>::zero(Q, ctx)) == 3);
    REQUIRE(dimension(irrelevant_ideal(Q, ctx)) == 0);
    REQUIRE(dimension(Ideal<Rationals>(Q, ctx, {X1})) == 2);
    REQUIRE(dimension(Ideal<Rationals>(Q, ctx, {X1, X2})) == 1);
    REQUIRE(dimension(Ideal<Rationals>(Q, ctx, {X1 * X2, X2 * X3, X1 * X3})) == 1);
    auto unit = Ideal<Rationals>(Q, ctx, {Polynomial<Rationals>::constant(Q, ctx, Q.one())});
    REQUIRE(dimension(unit) == -1);
}

TEST_CASE("module groebner solves syzygies of monomial tuples") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1);
    auto syz = syzygy_module(std::vector<Polynomial<Rationals>>{X1, X2});
    // the syzygy module of (X1, X2) is generated by (X2, -X1)
    REQUIRE(syz.size() == 1);
    REQUIRE(fsx::equal_up_to_scalar(syz[0][0] * X1 + syz[0][1] * X2,
                                    Polynomial<Rationals>::zero(Q, ctx)));
    REQUIRE(fsx::equal_up_to_scalar(syz[0][0], X2));
    REQUIRE(fsx::equal_up_to_scalar(syz[0][1], -X1));
}

TEST_CASE("module membership") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1);
    auto zero = Polynomial<Rationals>::zero(Q, ctx);
    auto one = Polynomial<Rationals>::constant(Q, ctx, Q.one());
    std::vector<ModVec<Rationals>> gens{{X1, zero}, {zero, X2}};
    auto G = module_groebner(gens, MonomialOrder::grevlex());
    REQUIRE(module_member<Rationals>({X1 * X2, X2 * X2}, G, MonomialOrder::grevlex()));
    REQUIRE(!module_member<Rationals>({X2, zero}, G, MonomialOrder::grevlex()));
    REQUIRE(!module_member<Rationals>({one, one}, G, MonomialOrder::grevlex()));
}
