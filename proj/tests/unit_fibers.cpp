// Fiber classification and the one-dimensional-fiber locus, cross-checked
// between the symbolic search and the exhaustive finite-field scan.
#include <catch_amalgamated.hpp>

#include "support/examples.hpp"

using namespace fiberscope;

namespace {

template <class F>
std::map<std::string, std::string> locus_map(const OneDimLocus<F>& L) {
    std::map<std::string, std::string> m;
    for (const auto& [p, h] : L.entries) m[p.str()] = scalar_normalized(h).str();
    return m;
}

} // namespace

TEST_CASE("fiber classification at hand-picked points of the degree-3 instance") {
    Rationals Q;
    auto phi = fsx::example2(Q);
    auto M = syzygy_generators(phi);
    using Kind = FiberReport<Rationals>::Kind;

    auto at = [&](const std::string& s) { return fiber_at_point(phi, M, parse_point(s, Q)); };

    auto r = at("1:0:0:0");
    REQUIRE(r.kind == Kind::OneDimensional);
    REQUIRE(r.h->str() == "X1");

    r = at("0:0:0:1");
    REQUIRE(r.kind == Kind::OneDimensional);
    REQUIRE(r.h->str() == "X1+X2+X3");

    // a generic image point has a finite fiber; a generic off-image point an
    // empty one
    r = at("1:1:1:1");
    REQUIRE(r.kind != Kind::OneDimensional);
}

TEST_CASE("empty versus zero-dimensional fibers") {
    Rationals Q;
    // squaring-style map with no base points: every fiber is finite
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    auto phi = Parameterization<Rationals>::make(
        Q, ctx, {X1 * X1, X2 * X2, X3 * X3, X1 * X2});
    auto r = fiber_at_point(phi, parse_point("1:1:1:1", Q));
    REQUIRE(r.kind == FiberReport<Rationals>::Kind::ZeroDimensional);
    REQUIRE(r.zero_dim_degree >= 1);
    auto e = fiber_at_point(phi, parse_point("1:1:1:0", Q));
    REQUIRE(e.kind == FiberReport<Rationals>::Kind::Empty);
}

TEST_CASE("one-dimensional locus of the degree-3 instance") {
    Rationals Q;
    auto L = one_dim_locus(fsx::example2(Q), 1);
    REQUIRE(!L.residual.has_value());
    REQUIRE(L.total_degree == 4);
    auto m = locus_map(L);
    REQUIRE(m == std::map<std::string, std::string>{{"0:0:0:1", "X1+X2+X3"},
                                                    {"0:0:1:0", "X3"},
                                                    {"0:1:0:0", "X2"},
                                                    {"1:0:0:0", "X1"}});
}

TEST_CASE("locus is independent of the seed") {
    Rationals Q;
    auto phi = fsx::example2(Q);
    auto a = one_dim_locus(phi, 3);
    auto b = one_dim_locus(phi, 1234567);
    REQUIRE(locus_map(a) == locus_map(b));
    REQUIRE(a.total_degree == b.total_degree);
}

TEST_CASE("every locus entry is certified by the pointwise classifier") {
    Rationals Q;
    auto phi = fsx::example1(Q);
    auto M = syzygy_generators(phi);
    auto L = one_dim_locus(phi, 9);
    REQUIRE(L.total_degree == 8);
    for (const auto& [p, h] : L.entries) {
        auto r = fiber_at_point(phi, M, p);
        REQUIRE(r.kind == FiberReport<Rationals>::Kind::OneDimensional);
        REQUIRE(fsx::equal_up_to_scalar(*r.h, h));
    }
}

TEST_CASE("symbolic locus equals the exhaustive scan over a small prime field") {
    PrimeField F(11);
    auto phi = fsx::example2(F);
    auto L = one_dim_locus(phi, 2);
    auto S = exhaustive_scan(phi);
    REQUIRE(locus_map(L) == locus_map(S));
    REQUIRE(L.total_degree == S.total_degree);
}

TEST_CASE("scan over an extension field finds at least the base-field points") {
    PrimeField F(5);
    auto phi = fsx::example2(F);
    auto base = exhaustive_scan(phi);
    auto ext = ExtensionField::make(5, 2);
    auto lifted = exhaustive_scan(extend_parameterization(phi, ext));
    REQUIRE(lifted.entries.size() >= base.entries.size());
    REQUIRE(lifted.total_degree >= base.total_degree);
}

TEST_CASE("locus search reports the degenerate pencil instance honestly") {
    // every linear factor of this map lies in a pencil, the image is a curve,
    // and the one-dimensional locus is infinite: the search must refuse
    // rather than return a finite answer.
    Rationals Q;
    REQUIRE_THROWS(one_dim_locus(fsx::example3(Q), 1));
    // the individually documented rational points still certify pointwise
    auto phi = fsx::example3(Q);
    auto M = syzygy_generators(phi);
    auto r = fiber_at_point(phi, M, parse_point("1:0:0:0", Q));
    REQUIRE(r.kind == FiberReport<Rationals>::Kind::OneDimensional);
    REQUIRE(r.h->str() == "X1");
}
