#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypershift/hypergraph.hpp"
#include "hypershift/verify.hpp"

using namespace hypershift;

TEST_CASE("construction validates and deduplicates") {
    const auto h = Hypergraph::from_vertex_lists(3, 2, {{1, 2}, {2, 3}, {1, 2}});
    CHECK(h.edge_count() == 2);
    CHECK(Hypergraph::from_vertex_lists(0, 1, {}).edge_count() == 0);
    CHECK_THROWS_AS(Hypergraph::from_vertex_lists(4, 5, {{1, 2, 3, 4, 4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph::from_vertex_lists(4, 3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph::from_vertex_lists(4, 2, {{1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph::from_vertex_lists(4, 5, {{1, 2, 3, 4, 5}}),
                    std::invalid_argument);
    CHECK_NOTHROW(Hypergraph::from_vertex_lists(4, 5, {}));  // r > n is fine when empty
    CHECK_THROWS_AS(Hypergraph(70, 2, {}), guard_error);
}

TEST_CASE("complete") {
    CHECK(complete(4, 2).edge_count() == 6);
    CHECK(complete(5, 5).edge_count() == 1);
    CHECK(complete(6, 3).edge_count() == 20);
    CHECK(complete(3, 0).edge_count() == 1);  // the empty edge
    CHECK_THROWS_AS(complete(4, 5), std::invalid_argument);
}

TEST_CASE("star family") {
    const auto star = star_extremal(5, 2, 2);
    CHECK(star.edge_count() == 4);
    for (VertexSet e : star.edges()) CHECK(has_vertex(e, 1));
    CHECK(star_extremal(7, 3, 1).edge_count() == 0);
    CHECK(star_extremal(6, 3, 2).edge_count() == 20 - 10);
}

TEST_CASE("cover-2 family") {
    const auto h = cover2_extremal(6, 3, 2);
    CHECK(h.edge_count() == 16);
    const VertexSet window = prefix_set(4);
    for (VertexSet e : h.edges()) CHECK(set_size(e & window) >= 2);
    // no edge may live entirely beyond the window
    for (VertexSet e : h.edges()) CHECK((e & window) != 0);
    CHECK(cover2_extremal(7, 3, 2).edge_count() == 22);
    CHECK(cover2_extremal(9, 3, 2).edge_count() == 34);
    CHECK_THROWS_AS(cover2_extremal(3, 3, 2), std::invalid_argument);
}

TEST_CASE("delete_vertices") {
    const auto star = star_extremal(6, 2, 2);
    CHECK(delete_vertices(star, vertex_bit(1)).edge_count() == 0);
    CHECK(delete_vertices(star, 0) == star);
    CHECK(delete_vertices(complete(5, 2), vertex_bit(1)).edge_count() == 6);
    CHECK_THROWS_AS(delete_vertices(star, vertex_bit(7)), std::invalid_argument);
}

TEST_CASE("link") {
    const auto star = star_extremal(6, 3, 2);
    const auto l1 = link(star, 1);
    CHECK(l1.uniformity() == 2);
    // all 2-subsets of [2,6]
    CHECK(l1 == delete_vertices(complete(6, 2), vertex_bit(1)));
    CHECK(link(star, 6).edge_count() == degree(star, vertex_bit(6)));
    CHECK(link(star_extremal(6, 2, 2), 6).edge_count() == 1);
    CHECK(link(complete(4, 3), 1) == delete_vertices(complete(4, 2), vertex_bit(1)));
    CHECK_THROWS_AS(link(complete(4, 1), 1), std::invalid_argument);
}

TEST_CASE("degree") {
    const auto h = complete(6, 3);
    CHECK(degree(h, 0) == h.edge_count());
    CHECK(degree(h, vertex_bit(2) | vertex_bit(5)) == 4);  // n - r + 1
    const auto star = star_extremal(7, 3, 3);
    CHECK(degree(star, vertex_bit(4) | vertex_bit(5)) == 2);  // kernel beyond the window: s - 1
}

TEST_CASE("relabel") {
    const auto star = star_extremal(5, 2, 2);
    CHECK(relabel(star, {1, 2, 3, 4, 5}) == star);
    const auto swapped = relabel(star, {2, 1, 3, 4, 5});
    CHECK(swapped.edge_count() == star.edge_count());
    for (VertexSet e : swapped.edges()) CHECK(has_vertex(e, 2));
    CHECK_THROWS_AS(relabel(star, {1, 1, 3, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(relabel(star, {1, 2}), std::invalid_argument);
}

TEST_CASE("canonical form and isomorphism") {
    const auto star1 = star_extremal(5, 2, 2);
    const auto star3 = relabel(star1, {3, 2, 1, 4, 5});
    CHECK(canonical_form(star1) == canonical_form(star3));
    CHECK(is_isomorphic(star1, star3));

    const auto claw = Hypergraph::from_vertex_lists(5, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    const auto path = Hypergraph::from_vertex_lists(5, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(canonical_form(claw) != canonical_form(path));
    CHECK_FALSE(is_isomorphic(claw, path));
    CHECK_THROWS_AS(canonical_form(Hypergraph(11, 2, {})), guard_error);
}

TEST_CASE("canonical form equals the naive minimum over all permutations") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rand_in(rng, 2, 6);
        const int r = rand_in(rng, 1, std::min(3, n));
        const auto h = random_hypergraph(rng, n, r);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v + 1;
        std::vector<VertexSet> naive_min = h.edges();
        do {
            const auto enc = relabel(h, perm).edges();
            if (enc < naive_min) naive_min = enc;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(canonical_form(h) == naive_min);
    }
}

TEST_CASE("canonical form is permutation invariant") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rand_in(rng, 2, 6);
        const int r = rand_in(rng, 1, std::min(3, n));
        const auto h = random_hypergraph(rng, n, r);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v + 1;
        for (int v = n - 1; v > 0; --v)
            std::swap(perm[static_cast<std::size_t>(v)],
                      perm[static_cast<std::size_t>(rand_in(rng, 0, v))]);
        CHECK(canonical_form(relabel(h, perm)) == canonical_form(h));
    }
}

TEST_CASE("text format") {
    const char* text =
        "# a comment\n"
        "5 2\n"
        "\n"
        "1 2\n"
        "2 3  # trailing comment\n";
    const auto h = parse_hypergraph(text);
    CHECK(h.vertex_count() == 5);
    CHECK(h.edge_count() == 2);
    CHECK(serialize(h) == "5 2\n1 2\n2 3\n");

    CHECK_THROWS_AS(parse_hypergraph("garbage here\n"), parse_error);
    CHECK_THROWS_AS(parse_hypergraph("3\n"), parse_error);
    CHECK_THROWS_AS(parse_hypergraph("3 2\n1 2 3\n"), parse_error);
    CHECK_THROWS_AS(parse_hypergraph("3 2\n1 9\n"), parse_error);
    CHECK_THROWS_AS(parse_hypergraph("3 2\n1 x\n"), parse_error);
    CHECK_THROWS_AS(parse_hypergraph(""), parse_error);
}

TEST_CASE("round trip and deletion-link partition on random instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = rand_in(rng, 1, 4);
        const int n = rand_in(rng, std::max(2, r), 9);
        const auto h = random_hypergraph(rng, n, r);
        CHECK(parse_hypergraph(serialize(h)) == h);
        if (r >= 2) {
            const int v = rand_in(rng, 1, n);
            CHECK(delete_vertices(h, vertex_bit(v)).edge_count() + link(h, v).edge_count() ==
                  h.edge_count());
        }
    }
}

TEST_CASE("degree equals the edge count of the iterated link") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, r + 1, 9);
        const auto h = random_hypergraph(rng, n, r);
        const int tsize = rand_in(rng, 1, r - 1);
        // pick a random t-subset of [n]
        VertexSet t = 0;
        while (set_size(t) < tsize) t |= vertex_bit(rand_in(rng, 1, n));
        Hypergraph chain = h;
        for (int v : to_vertices(t)) chain = link(chain, v);
        CHECK(degree(h, t) == chain.edge_count());
    }
}
