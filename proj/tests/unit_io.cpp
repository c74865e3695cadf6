// Input grammar, expression parsing and point parsing.
#include <catch_amalgamated.hpp>

#include "support/examples.hpp"

using namespace fiberscope;

static const char* kExample2Text =
    "# comment\n"
    "field rational\n"
    "degree 3\n"
    "f0 X2*X3*(X1+X2+X3)\n"
    "f1 X1*X3*(X1+X2+X3)\n"
    "f2 X1*X2*(X1+X2+X3)\n"
    "f3 X1*X2*X3\n";

TEST_CASE("input file parses to the expected parameterization") {
    Rationals Q;
    auto spec = parse_input(kExample2Text);
    REQUIRE(spec.rational);
    REQUIRE(spec.degree == 3);
    auto phi = make_parameterization(spec, Q);
    auto oracle = fsx::example2(Q);
    for (int i = 0; i < 4; ++i)
        REQUIRE(phi.f[static_cast<size_t>(i)] == oracle.f[static_cast<size_t>(i)]);
}

TEST_CASE("polynomial str round-trips through the parser") {
    Rationals Q;
    auto phi = fsx::example1(Q);
    for (const auto& f : phi.f) REQUIRE(parse_polynomial(f.str(), Q, phi.ctx) == f);
}

TEST_CASE("prime field input") {
    auto spec = parse_input("field prime 13\ndegree 2\nf0 X1^2\nf1 X2^2\nf2 X3^2\nf3 X1*X2\n");
    REQUIRE(!spec.rational);
    REQUIRE(spec.prime == 13);
    PrimeField F(13);
    auto phi = make_parameterization(spec, F);
    REQUIRE(phi.d == 2);
}

TEST_CASE("grammar errors carry line diagnostics") {
    REQUIRE_THROWS_AS(parse_input("degree 3\nf0 X1^3\nf1 X1^3\nf2 X1^3\nf3 X1^3\n"),
                      ParseError); // missing field line
    REQUIRE_THROWS_AS(parse_input("field rational\nf0 X1\nf1 X1\nf2 X1\nf3 X1\n"),
                      ParseError); // missing degree
    REQUIRE_THROWS_AS(parse_input("field rational\ndegree 3\nf0 X1^3\n"), ParseError);
    REQUIRE_THROWS_AS(parse_input("field rational\ndegree 3\nbogus X1\n"), ParseError);
    try {
        Rationals Q;
        parse_polynomial("X1 + X4", Q, make_x_context(), 3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.line == 3);
        REQUIRE(std::string(e.what()).find("X4") != std::string::npos);
    }
}

TEST_CASE("homogeneity and degree violations are rejected") {
    Rationals Q;
    auto bad1 = parse_input("field rational\ndegree 2\nf0 X1^2+X2\nf1 X1^2\nf2 X2^2\nf3 X3^2\n");
    REQUIRE_THROWS(make_parameterization(bad1, Q));
    auto bad2 = parse_input("field rational\ndegree 3\nf0 X1^2\nf1 X1^3\nf2 X2^3\nf3 X3^3\n");
    REQUIRE_THROWS(make_parameterization(bad2, Q));
}

TEST_CASE("expression grammar corner cases") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1);
    REQUIRE(parse_polynomial("-X1*-X2", Q, ctx) == X1 * X2);
    REQUIRE(parse_polynomial("(X1+X2)^2", Q, ctx) == (X1 + X2) * (X1 + X2));
    REQUIRE(parse_polynomial("2*X1 - X1 - X1", Q, ctx).is_zero());
    REQUIRE_THROWS_AS(parse_polynomial("X1 +", Q, ctx), ParseError);
    REQUIRE_THROWS_AS(parse_polynomial("X1 ^ X2", Q, ctx), ParseError);
    REQUIRE_THROWS_AS(parse_polynomial("(X1", Q, ctx), ParseError);
}

TEST_CASE("point parsing") {
    Rationals Q;
    auto p = parse_point("1:2/3:0:-1", Q);
    REQUIRE(Q.eq(p.coords[1], Q.div(Q.from_int(2), Q.from_int(3))));
    REQUIRE(parse_point("0:2:0:0", Q) == parse_point("0:1:0:0", Q));
    REQUIRE_THROWS(parse_point("1:2:3", Q));
    REQUIRE_THROWS(parse_point("1:a:3:4", Q));
}
