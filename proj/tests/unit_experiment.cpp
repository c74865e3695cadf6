// Random instance generation and the degree sweep.
#include <catch_amalgamated.hpp>

#include "support/examples.hpp"

using namespace fiberscope;

TEST_CASE("random parameterization is deterministic in (p, d, seed)") {
    auto a = random_parameterization(101, 3, 7);
    auto b = random_parameterization(101, 3, 7);
    REQUIRE(a.phi.has_value() == b.phi.has_value());
    REQUIRE(a.rejected_at == b.rejected_at);
    if (a.phi)
        for (int i = 0; i < 4; ++i)
            REQUIRE(a.phi->f[static_cast<size_t>(i)] == b.phi->f[static_cast<size_t>(i)]);
}

TEST_CASE("accepted instances re-pass the hypothesis check") {
    int accepted = 0;
    for (uint64_t seed = 1; seed <= 30 && accepted < 5; ++seed) {
        auto inst = random_parameterization(101, 3, seed);
        if (!inst.phi) continue;
        ++accepted;
        auto rep = check_base_locus(*inst.phi);
        REQUIRE(rep.hypotheses_pass);
    }
    REQUIRE(accepted >= 5);
}

TEST_CASE("rejections carry the failed gate") {
    bool saw_rejection = false;
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        auto inst = random_parameterization(101, 3, seed, Sampler::uniform);
        if (!inst.phi) {
            saw_rejection = true;
            REQUIRE(!inst.rejected_at.empty());
        }
    }
    REQUIRE(saw_rejection); // uniform sampling almost never meets the hypotheses
}

TEST_CASE("sweep emits the fixed CSV header and is deterministic") {
    auto rows = sweep(101, 3, 3, 3, 5);
    auto csv1 = sweep_csv(rows);
    auto csv2 = sweep_csv(sweep(101, 3, 3, 3, 5));
    REQUIRE(csv1 == csv2);
    REQUIRE(csv1.rfind("d,attempted,accepted,max_sum,bound,seed", 0) == 0);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].attempted == 3);
    REQUIRE(!rows[0].falsified);
}

TEST_CASE("empty degree range gives an empty table") {
    auto rows = sweep(101, 5, 4, 3, 1);
    REQUIRE(rows.empty());
    REQUIRE(sweep_csv(rows) == "d,attempted,accepted,max_sum,bound,seed\n");
}

TEST_CASE("accepted instances respect the degree-3 bound under the scan") {
    int accepted = 0;
    for (uint64_t seed = 1; seed <= 40 && accepted < 5; ++seed) {
        auto inst = random_parameterization(7, 3, seed);
        if (!inst.phi) continue;
        ++accepted;
        REQUIRE(sum_fiber_degrees(exhaustive_scan(*inst.phi)) <= theorem_bound(3));
    }
    REQUIRE(accepted >= 5);
}
