#include <doctest.h>

#include <cmath>

#include "hypershift/matching.hpp"
#include "hypershift/norms.hpp"
#include "hypershift/search.hpp"
#include "hypershift/sunflower.hpp"
#include "oracles.hpp"

using namespace hypershift;

TEST_CASE("star closed form") {
    CHECK(star_count_formula(5, 2, 2, 2) == 6);
    CHECK(star_count_formula(6, 3, 2, 2) == 30);
    CHECK(star_count_formula(9, 3, 1, 2) == 0);
    CHECK(star_count_formula(9, 3, 1, 1) == 0);
    CHECK(star_count_formula(7, 2, 2, 1) == star_extremal(7, 2, 2).edge_count());
    CHECK_THROWS_AS(star_count_formula(3, 4, 2, 2), std::invalid_argument);
}

TEST_CASE("cover-2 closed form") {
    CHECK(cover2_count_formula(7, 3, 2, 2) == 96);
    CHECK(cover2_count_formula(7, 3, 2, 2) ==
          oracle::count_sunflowers(cover2_extremal(7, 3, 2), 2, 2));
    CHECK(cover2_count_formula(6, 3, 2, 1) == 16);
    // k = 7 exceeds every kernel degree (max is n - r + 1 = 5), so no copies
    CHECK(cover2_count_formula(7, 3, 2, 7) == 0);
    CHECK_THROWS_AS(cover2_count_formula(6, 2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(cover2_count_formula(3, 3, 2, 2), std::invalid_argument);
}

TEST_CASE("cover-2 growth rate approaches the leading coefficient") {
    // formula / n^{r+k-3} -> C((s-1)r+1, 2) / ((r-3)! k!) for r=3, s=2, k=2: 3
    double prev = 0.0;
    for (int n : {50, 100, 200}) {
        const double ratio =
            static_cast<double>(cover2_count_formula(n, 3, 2, 2)) / (static_cast<double>(n) * n);
        CHECK(ratio > prev);  // approaches from below
        CHECK(std::abs(ratio / 3.0 - 1.0) < 0.03);
        prev = ratio;
    }
}

TEST_CASE("edge-count bounds") {
    for (int n = 4; n <= 9; ++n)
        for (int s = 1; s <= 3; ++s)
            CHECK(star_edge_bound(n, 3, s) == star_extremal(n, 3, s).edge_count());
    CHECK(star_edge_bound(9, 3, 1) == 0);
    CHECK(emc_bound(7, 3, 2) == 15);
    CHECK(emc_bound(7, 3, 1) == 0);
}

TEST_CASE("exhaustive maximization at n = 5") {
    SearchOptions opt;
    opt.n = 5;
    opt.r = 2;
    opt.s = 2;
    opt.k = 2;
    opt.objective = Objective::SunflowerCount;
    const auto rep = brute_force_max(opt);
    CHECK(rep.max_value == 6);
    CHECK(rep.explored == std::uint64_t{1} << 10);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(is_isomorphic(rep.witnesses[0], star_extremal(5, 2, 2)));

    opt.objective = Objective::EdgeCount;
    const auto edges = brute_force_max(opt);
    CHECK(edges.max_value == 4);
    CHECK(edges.max_value == star_edge_bound(5, 2, 2));
    REQUIRE(edges.witnesses.size() == 1);
    CHECK(is_isomorphic(edges.witnesses[0], star_extremal(5, 2, 2)));
}

TEST_CASE("below the threshold the star is not unique") {
    SearchOptions opt;
    opt.n = 4;
    opt.r = 2;
    opt.s = 2;
    opt.objective = Objective::EdgeCount;
    const auto rep = brute_force_max(opt);
    CHECK(rep.max_value == 3);
    CHECK(rep.witnesses.size() == 2);
    const auto triangle =
        Hypergraph::from_vertex_lists(4, 2, {{1, 2}, {1, 3}, {2, 3}});
    const auto star = star_extremal(4, 2, 2);
    bool has_triangle = false, has_star = false;
    for (const auto& w : rep.witnesses) {
        if (is_isomorphic(w, triangle)) has_triangle = true;
        if (is_isomorphic(w, star)) has_star = true;
    }
    CHECK(has_triangle);
    CHECK(has_star);
}

TEST_CASE("shifted-only search agrees with the unrestricted scan") {
    struct Case {
        int n, r, s;
        Objective obj;
    };
    const std::vector<Case> cases = {
        {4, 2, 2, Objective::SunflowerCount}, {5, 2, 2, Objective::SunflowerCount},
        {6, 2, 2, Objective::SunflowerCount}, {5, 3, 2, Objective::SunflowerCount},
        {5, 2, 2, Objective::Norm},           {5, 2, 3, Objective::EdgeCount},
        {5, 3, 2, Objective::EdgeCount},
    };
    for (const auto& c : cases) {
        SearchOptions opt;
        opt.n = c.n;
        opt.r = c.r;
        opt.s = c.s;
        opt.k = 2;
        opt.objective = c.obj;
        const auto full = brute_force_max(opt);
        opt.restrict_shifted = true;
        const auto shifted = brute_force_max(opt);
        CHECK(full.max_value == shifted.max_value);
        CHECK(shifted.explored < full.explored);
    }
}

TEST_CASE("parallel scan is deterministic") {
    SearchOptions opt;
    opt.n = 5;
    opt.r = 2;
    opt.s = 2;
    opt.k = 2;
    opt.objective = Objective::Norm;
    const auto one = brute_force_max(opt);
    opt.jobs = 3;
    const auto three = brute_force_max(opt);
    CHECK(one.max_value == three.max_value);
    CHECK(one.explored == three.explored);
    REQUIRE(one.witnesses.size() == three.witnesses.size());
    for (std::size_t w = 0; w < one.witnesses.size(); ++w)
        CHECK(one.witnesses[w] == three.witnesses[w]);
    CHECK(to_report_text(one) == to_report_text(three));
}

TEST_CASE("guards") {
    SearchOptions opt;
    opt.n = 9;
    opt.r = 2;
    opt.s = 2;
    opt.objective = Objective::EdgeCount;
    CHECK_THROWS_AS(brute_force_max(opt), guard_error);
    opt.restrict_shifted = true;
    CHECK_NOTHROW(brute_force_max(opt));  // 36 candidates fit the shifted guard
}

TEST_CASE("norm extremality") {
    const auto good = norm_extremal_check(6, 2, 2, 2);
    CHECK(good.holds);
    CHECK(good.star_value == 30);
    CHECK(good.report.max_value == 30);
    CHECK_FALSE(good.tie);

    const auto tie = norm_extremal_check(4, 2, 2, 2);
    CHECK_FALSE(tie.holds);
    CHECK(tie.star_attains);
    CHECK(tie.tie);
    CHECK(tie.star_value == 12);
    CHECK(tie.report.witnesses.size() == 2);
}

TEST_CASE("counterexample: sunflower decrease exists below the full kernel") {
    CounterexampleQuery q;
    q.target = "S_{1,2}-decrease";
    q.r = 3;
    q.n_max = 7;
    q.seed = 7;
    const auto rep = find_shift_counterexample(q);
    REQUIRE(rep.found);
    CHECK(reverify(rep));
    CHECK(count_sunflowers(rep.after, 1, 2) < count_sunflowers(rep.before, 1, 2));
}

TEST_CASE("counterexample: freeness targets are witnessable") {
    for (const char* target : {"P_2-freeness", "C_3-freeness", "S_3-freeness", "K_3-freeness"}) {
        CounterexampleQuery q;
        q.target = target;
        q.r = 3;
        q.n_max = 8;
        q.seed = 7;
        q.trials = 600;
        const auto rep = find_shift_counterexample(q);
        INFO(target);
        REQUIRE(rep.found);
        CHECK(reverify(rep));
    }
}

TEST_CASE("counterexample: full-kernel decrease is never found") {
    for (int k = 2; k <= 3; ++k) {
        CounterexampleQuery q;
        q.target = "S_{2," + std::to_string(k) + "}-decrease";
        q.r = 3;
        q.n_max = 6;
        q.seed = 7;
        q.trials = 120;
        const auto rep = find_shift_counterexample(q);
        CHECK_FALSE(rep.found);
        CHECK(rep.explored > 0);
    }
}

TEST_CASE("target parsing") {
    CounterexampleQuery q;
    q.target = "S_{1,2}^4-decrease";
    q.r = 3;
    CHECK_THROWS_AS(find_shift_counterexample(q), std::invalid_argument);
    q.target = "Q_2-freeness";
    CHECK_THROWS_AS(find_shift_counterexample(q), std::invalid_argument);
    q.target = "K_4-freeness";
    CHECK_THROWS_AS(find_shift_counterexample(q), std::invalid_argument);
}

TEST_CASE("report serialization is stable") {
    SearchOptions opt;
    opt.n = 5;
    opt.r = 2;
    opt.s = 2;
    opt.k = 2;
    opt.objective = Objective::SunflowerCount;
    const auto rep = brute_force_max(opt);
    const std::string text = to_report_text(rep);
    CHECK(text == to_report_text(brute_force_max(opt)));
    CHECK(text.find("max_value: 6") != std::string::npos);
    CHECK(text.find("witness 1:") != std::string::npos);
    const std::string csv = to_csv(rep);
    CHECK(csv == "objective,n,r,s,k,max_value,witness_count,explored,seed\n"
                 "sunflower-count,5,2,2,2,6,1,1024,0\n");
}
