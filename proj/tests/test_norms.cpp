#include <doctest.h>

#include <random>

#include "hypershift/norms.hpp"
#include "hypershift/sunflower.hpp"
#include "hypershift/verify.hpp"

using namespace hypershift;

TEST_CASE("stirling numbers") {
    for (int k = 1; k <= 12; ++k) {
        CHECK(stirling2(k, 1) == 1);
        CHECK(stirling2(k, k) == 1);
    }
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(4, 6) == 0);
    CHECK_THROWS_AS(stirling2(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(stirling2(25, 5), guard_error);
}

TEST_CASE("stirling formula agrees with the recurrence") {
    // S(k,m) = m S(k-1,m) + S(k-1,m-1), built independently
    constexpr int kMax = 12;
    std::uint64_t table[kMax + 1][kMax + 1] = {};
    table[0][0] = 1;
    for (int k = 1; k <= kMax; ++k)
        for (int m = 1; m <= k; ++m)
            table[k][m] = m * table[k - 1][m] + table[k - 1][m - 1];
    for (int k = 0; k <= kMax; ++k)
        for (int m = 0; m <= k; ++m) CHECK(stirling2(k, m) == table[k][m]);
}

TEST_CASE("newton expansion of powers") {
    CHECK(newton_expand_check(0, 3));
    CHECK(newton_expand_check(1, 5));
    for (std::uint64_t d = 0; d <= 20; ++d)
        for (int k = 1; k <= 6; ++k) CHECK(newton_expand_check(d, k));
}

TEST_CASE("direct norm on known families") {
    CHECK(norm_direct(Hypergraph(5, 2, {}), 1, 2) == 0);
    CHECK(norm_direct(star_extremal(6, 2, 2), 1, 2) == 25 + 5);
    CHECK(norm_direct(star_extremal(8, 2, 2), 1, 3) == 343 + 7);
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, r + 1, 9);
        const auto h = random_hypergraph(rng, n, r);
        CHECK(norm_direct(h, r - 1, 1) == static_cast<std::uint64_t>(r) * h.edge_count());
    }
    CHECK_THROWS_AS(norm_direct(complete(4, 2), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(norm_direct(complete(4, 2), 1, 0), std::invalid_argument);
}

TEST_CASE("count-route norm equals the degree-power norm") {
    const auto star = star_extremal(6, 3, 2);
    CHECK(norm_via_identity(star, 2) == norm_direct(star, 2, 2));
    CHECK(norm_via_identity(star, 2) ==
          3 * star.edge_count() + 2 * count_sunflowers(star, 2, 2));

    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 150; ++trial) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, r + 1, 9);
        const auto h = random_hypergraph(rng, n, r);
        const int k = rand_in(rng, 2, 5);
        CHECK(norm_via_identity(h, k) == norm_direct(h, r - 1, k));
    }
    CHECK_THROWS_AS(norm_via_identity(complete(4, 3), 1), std::invalid_argument);
}

TEST_CASE("norm respects relabeling and edge addition") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = rand_in(rng, 2, 3);
        const int n = rand_in(rng, r + 1, 8);
        const auto h = random_hypergraph(rng, n, r);
        const int t = rand_in(rng, 1, r - 1);
        const int k = rand_in(rng, 1, 3);

        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v + 1;
        for (int v = n - 1; v > 0; --v)
            std::swap(perm[static_cast<std::size_t>(v)],
                      perm[static_cast<std::size_t>(rand_in(rng, 0, v))]);
        CHECK(norm_direct(relabel(h, perm), t, k) == norm_direct(h, t, k));

        const auto full = complete(n, r);
        if (h.edge_count() < full.edge_count()) {
            VertexSet extra = 0;
            for (VertexSet e : full.edges())
                if (!h.has_edge(e)) {
                    extra = e;
                    break;
                }
            auto edges = h.edges();
            edges.push_back(extra);
            CHECK(norm_direct(Hypergraph(n, r, std::move(edges)), t, k) >=
                  norm_direct(h, t, k));
        }
    }
}
