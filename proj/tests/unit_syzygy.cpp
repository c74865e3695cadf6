// Syzygy matrices and the base-locus hypothesis report.
#include <catch_amalgamated.hpp>

#include "support/examples.hpp"

using namespace fiberscope;

TEST_CASE("syzygy columns annihilate the forms exactly") {
    Rationals Q;
    for (auto phi : {fsx::example1(Q), fsx::example2(Q)}) {
        auto M = syzygy_generators(phi);
        REQUIRE(!M.columns.empty());
        for (const auto& col : M.columns) {
            auto acc = Polynomial<Rationals>::zero(Q, phi.ctx);
            for (int i = 0; i < 4; ++i)
                acc = acc + col[static_cast<size_t>(i)] * phi.f[static_cast<size_t>(i)];
            REQUIRE(acc.is_zero());
        }
    }
}

TEST_CASE("column degrees of the degree-6 instance are 2,2,2,4") {
    Rationals Q;
    auto M = syzygy_generators(fsx::example1(Q));
    REQUIRE(M.column_degrees == std::vector<int>{2, 2, 2, 4});
}

TEST_CASE("minimalization removes module-redundant columns") {
    Rationals Q;
    auto phi = fsx::example2(Q);
    auto M = syzygy_generators(phi);
    // duplicating a column and re-minimalizing returns to the same matrix
    auto fat = M;
    fat.columns.push_back(M.columns.front());
    fat.column_degrees.push_back(M.column_degrees.front());
    auto slim = minimalize(fat);
    REQUIRE(slim.columns.size() == M.columns.size());
    REQUIRE(slim.column_degrees == M.column_degrees);
}

TEST_CASE("2x2 minors of the syzygy matrix via Laplace expansion") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1), X3 = fsx::var(Q, ctx, 2);
    // hand matrix with two columns (X2, -X1, 0, 0) and (0, X3, -X2, 0)
    auto zero = Polynomial<Rationals>::zero(Q, ctx);
    SyzygyMatrix<Rationals> M;
    M.columns.push_back({X2, -X1, zero, zero});
    M.columns.push_back({zero, X3, -X2, zero});
    M.column_degrees = {1, 1};
    auto I2 = minors_ideal(M, 2);
    // minors: X2*X3, -X2*X2, X1*X2 (rows {0,1},{0,2},{1,2})
    Ideal<Rationals> expect(Q, ctx, {X2 * X3, X2 * X2, X1 * X2});
    REQUIRE(I2.equals(expect));
}

TEST_CASE("hypothesis report on the worked instances") {
    Rationals Q;
    SECTION("degree-3, all hypotheses pass") {
        auto rep = check_base_locus(fsx::example2(Q));
        REQUIRE(rep.is_finite);
        REQUIRE(rep.degP == 6);
        REQUIRE(rep.is_lci);
        REQUIRE(rep.is_saturated);
        REQUIRE(rep.indeg_sat == 3);
        REQUIRE(rep.hypotheses_pass);
    }
    SECTION("degree-3, locally-complete-intersection failure") {
        auto rep = check_base_locus(fsx::example3(Q));
        REQUIRE(rep.is_finite);
        REQUIRE(rep.degP == 6);
        REQUIRE(!rep.is_lci);
        REQUIRE(!rep.hypotheses_pass);
    }
    SECTION("degree-6 instance") {
        auto rep = check_base_locus(fsx::example1(Q));
        REQUIRE(rep.is_finite);
        REQUIRE(rep.degP == 24);
    }
    SECTION("family member d=4") {
        auto rep = check_base_locus(fsx::example4(Q, 4));
        REQUIRE(rep.hypotheses_pass);
        REQUIRE(rep.degP == 11);
    }
}

TEST_CASE("parameterization constructor rejects bad input") {
    Rationals Q;
    auto ctx = make_x_context();
    auto X1 = fsx::var(Q, ctx, 0), X2 = fsx::var(Q, ctx, 1);
    auto zero = Polynomial<Rationals>::zero(Q, ctx);
    // all four zero
    REQUIRE_THROWS(Parameterization<Rationals>::make(Q, ctx, {zero, zero, zero, zero}));
    // mixed degrees
    REQUIRE_THROWS(Parameterization<Rationals>::make(Q, ctx, {X1, X2 * X2, X2, X1}));
    // inhomogeneous entry
    REQUIRE_THROWS(Parameterization<Rationals>::make(
        Q, ctx, {X1 + X2 * X2, X2 * X2, X1 * X2, X1 * X1}));
}
