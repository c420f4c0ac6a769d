#include <doctest.h>

#include <random>
#include <set>

#include "hypershift/sunflower.hpp"
#include "hypershift/verify.hpp"
#include "oracles.hpp"

using namespace hypershift;

TEST_CASE("counting on known families") {
    CHECK(count_sunflowers(complete(3, 2), 1, 2) == 3);
    CHECK(count_sunflowers(star_extremal(5, 2, 2), 1, 2) == 6);
    CHECK(count_sunflowers(complete(4, 3), 2, 2) == 6);
    const auto h = Hypergraph::from_vertex_lists(6, 3, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}});
    CHECK(count_sunflowers(h, 1, 2) == 3);
    CHECK(count_sunflowers(h, 2, 2) == 0);
    for (int t = 1; t <= 2; ++t) CHECK(count_sunflowers(h, t, 1) == h.edge_count());
    CHECK_THROWS_AS(count_sunflowers(h, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_sunflowers(h, 1, 0), std::invalid_argument);
}

TEST_CASE("counts match the k-subset oracle") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 150; ++trial) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, r + 1, 8);
        const auto h = random_hypergraph(rng, n, r);
        const int t = rand_in(rng, 0, r - 1);
        const int k = rand_in(rng, 1, 3);
        CHECK(count_sunflowers(h, t, k) == oracle::count_sunflowers(h, t, k));
    }
}

TEST_CASE("enumeration is exact, unique and consistent with counting") {
    CHECK(enumerate_sunflowers(Hypergraph(5, 3, {}), 2, 2).empty());
    CHECK(enumerate_sunflowers(complete(4, 3), 2, 2).size() == 6);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, r + 1, 8);
        const auto h = random_hypergraph(rng, n, r);
        const int t = rand_in(rng, 0, r - 1);
        const int k = rand_in(rng, 1, 3);
        std::set<std::vector<VertexSet>> seen;
        std::uint64_t streamed = 0;
        for_each_sunflower(h, t, k, [&](const Sunflower& f) {
            ++streamed;
            REQUIRE(is_sunflower_copy(h, f, t));
            REQUIRE(f.petal_count() == k);
            CHECK(seen.insert(f.petals).second);
        });
        CHECK(streamed == count_sunflowers(h, t, k));
    }
}

TEST_CASE("degree-sum route") {
    CHECK(count_via_degrees(complete(3, 2), 2) == 3);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, r + 1, 9);
        const auto h = random_hypergraph(rng, n, r);
        CHECK(count_via_degrees(h, 1) ==
              static_cast<std::uint64_t>(r) * h.edge_count());
        const int k = rand_in(rng, 2, 4);
        CHECK(count_via_degrees(h, k) == count_sunflowers(h, r - 1, k));
    }
}

TEST_CASE("breakdown at a vertex") {
    const auto h = Hypergraph::from_vertex_lists(6, 3, {{2, 3, 4}, {2, 3, 5}, {2, 3, 6}});
    const auto at_isolated = count_breakdown(h, 1, 2);
    CHECK(at_isolated.not_containing == count_sunflowers(h, 2, 2));
    CHECK(at_isolated.core_at == 0);
    CHECK(at_isolated.petal_at == 0);

    // the star family: core-at-1 copies come from the complete link
    const int n = 8, r = 3, k = 3;
    const auto star = star_extremal(n, r, 2);
    const auto bd = count_breakdown(star, 1, k);
    CHECK(bd.core_at == binomial(n - 1, r - 2) * binomial(n - r + 1, k));  // 140
    CHECK(bd.core_at == 140);
    CHECK(bd.not_containing == 0);
    CHECK(bd.total() == count_sunflowers(star, r - 1, k));

    CHECK_THROWS_AS(count_breakdown(h, 1, 1), std::invalid_argument);
}

TEST_CASE("breakdown parts always partition the total") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, r + 1, 9);
        const auto h = random_hypergraph(rng, n, r);
        const int v = rand_in(rng, 1, n);
        const int k = rand_in(rng, 2, 3);
        CHECK(count_breakdown(h, v, k).total() == count_sunflowers(h, r - 1, k));
    }
}

TEST_CASE("deletion-link recursion") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 120; ++trial) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, r + 1, 9);
        const auto h = random_hypergraph(rng, n, r);
        const int v = rand_in(rng, 1, n);
        CHECK(count_recursion_check(h, v, 1));
        CHECK(count_recursion_check(h, v, rand_in(rng, 2, 3)));
    }
    // a named slack case: the star family at its center
    CHECK(count_recursion_check(star_extremal(8, 3, 2), 1, 3));
}

TEST_CASE("adding an edge never lowers a count") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 80; ++trial) {
        const int r = rand_in(rng, 2, 3);
        const int n = rand_in(rng, r + 1, 8);
        const auto h = random_hypergraph(rng, n, r);
        const auto full = complete(n, r);
        if (h.edge_count() == full.edge_count()) continue;
        // first absent edge
        VertexSet extra = 0;
        for (VertexSet e : full.edges())
            if (!h.has_edge(e)) {
                extra = e;
                break;
            }
        auto edges = h.edges();
        edges.push_back(extra);
        const Hypergraph larger(n, r, std::move(edges));
        const int t = rand_in(rng, 0, r - 1);
        const int k = rand_in(rng, 1, 3);
        CHECK(count_sunflowers(larger, t, k) >= count_sunflowers(h, t, k));
    }
}
