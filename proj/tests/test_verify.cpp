#include <doctest.h>

#include "hypershift/verify.hpp"

using namespace hypershift;

TEST_CASE("every suite runs clean at unit scale") {
    for (const auto& name : suite_names()) {
        const auto res = run_suite(name, 5, 60);
        INFO(name);
        CHECK(res.fail == 0);
        CHECK(res.pass > 0);
        CHECK(res.name == name);
    }
    CHECK_THROWS_AS(run_suite("nonsense", 1, 10), std::invalid_argument);
}

TEST_CASE("suites are reproducible for a fixed seed") {
    const auto a = run_suite("lemma24", 99, 40);
    const auto b = run_suite("lemma24", 99, 40);
    CHECK(a.pass == b.pass);
    CHECK(a.fail == b.fail);
}

TEST_CASE("random corpus hits the documented parameter ranges") {
    std::mt19937_64 rng(1);
    bool saw_r2 = false, saw_r4 = false, saw_empty = false, saw_dense = false;
    for (int trial = 0; trial < 300; ++trial) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, r + 1, 10);
        const auto h = random_hypergraph(rng, n, r);
        if (r == 2) saw_r2 = true;
        if (r == 4) saw_r4 = true;
        if (h.edge_count() == 0) saw_empty = true;
        if (h.edge_count() == complete(n, r).edge_count()) saw_dense = true;
    }
    CHECK(saw_r2);
    CHECK(saw_r4);
    CHECK(saw_empty);
    CHECK(saw_dense);
}
