#include "hypershift/verify.hpp"

#include <algorithm>

#include "hypershift/matching.hpp"
#include "hypershift/norms.hpp"
#include "hypershift/search.hpp"
#include "hypershift/shifting.hpp"
#include "hypershift/sunflower.hpp"
#include "subset_iter.hpp"

namespace hypershift {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

int rand_in(std::mt19937_64& rng, int lo, int hi) {
    if (hi < lo) return lo;
    return lo + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r) {
    const int density = rand_in(rng, 0, 100);
    std::vector<VertexSet> edges;
    detail::for_each_subset(n, r, [&](VertexSet e) {
        if (rand_in(rng, 1, 100) <= density) edges.push_back(e);
    });
    return Hypergraph(n, r, std::move(edges));
}

namespace {

struct Instance {
    Hypergraph h;
    ShiftPair p;
};

// Shared corpus for the shift suites: r in {2,3,4}, n <= n_max, random
// density, random pair i < j. Identical seeds give identical streams.
Instance random_instance(std::mt19937_64& rng, int n_max) {
    const int r = rand_in(rng, 2, 4);
    const int n = rand_in(rng, std::max(r + 1, 4), n_max);
    const int i = rand_in(rng, 1, n - 1);
    const int j = rand_in(rng, i + 1, n);
    return {random_hypergraph(rng, n, r), ShiftPair{i, j}};
}

void note_failure(SuiteResult& res, const std::string& what) {
    ++res.fail;
    if (res.failures.size() < 10) res.failures.push_back(what);
}

std::string describe(const Instance& inst) {
    return "n=" + std::to_string(inst.h.vertex_count()) +
           " r=" + std::to_string(inst.h.uniformity()) +
           " m=" + std::to_string(inst.h.edge_count()) +
           " pair=(" + std::to_string(inst.p.i) + "," + std::to_string(inst.p.j) + ")";
}

SuiteResult suite_shift_matching(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult res;
    res.name = "lemma21";
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Instance inst = random_instance(rng, 10);
        const int before = max_matching_size(inst.h.edges(), inst.h.uniformity());
        const int after =
            max_matching_size(shift(inst.h, inst.p).edges(), inst.h.uniformity());
        if (after <= before)
            ++res.pass;
        else
            note_failure(res, "matching grew: " + describe(inst));
    }
    return res;
}

SuiteResult suite_shift_sunflowers(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult res;
    res.name = "lemma24";
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Instance inst = random_instance(rng, 10);
        const Hypergraph shifted = shift(inst.h, inst.p);
        const int r = inst.h.uniformity();
        bool ok = true;
        for (int k = 1; k <= 4 && ok; ++k)
            ok = count_sunflowers(shifted, r - 1, k) >= count_sunflowers(inst.h, r - 1, k);
        if (ok)
            ++res.pass;
        else
            note_failure(res, "count dropped: " + describe(inst));
    }
    return res;
}

SuiteResult suite_transport(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult res;
    res.name = "phi-injective";
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Instance inst = random_instance(rng, 8);
        const int k = rand_in(rng, 1, 4);
        if (verify_transport_injective(inst.h, inst.p, k))
            ++res.pass;
        else
            note_failure(res, "transport failed: " + describe(inst) + " k=" + std::to_string(k));
    }
    return res;
}

SuiteResult suite_norm_identity(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult res;
    res.name = "identity11";
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Instance inst = random_instance(rng, 10);
        const int k = rand_in(rng, 2, 5);
        const int r = inst.h.uniformity();
        if (norm_via_identity(inst.h, k) == norm_direct(inst.h, r - 1, k))
            ++res.pass;
        else
            note_failure(res, "norm mismatch: " + describe(inst) + " k=" + std::to_string(k));
    }
    return res;
}

// The literal three-step overcount: pick an edge avoiding v, pick its kernel,
// pick k-2 further petal vertices; keep only choices that really form a copy
// with petal vertex v. Each such copy arises exactly k-1 times.
std::uint64_t three_step_enumeration(const Hypergraph& h, int v, int k) {
    const int n = h.vertex_count();
    const VertexSet vb = vertex_bit(v);
    std::uint64_t raw = 0;
    for (VertexSet e : h.edges()) {
        if (e & vb) continue;
        for (VertexSet rest = e; rest; rest &= rest - 1) {
            const VertexSet kernel = e ^ (rest & (~rest + 1));
            if (!h.has_edge(kernel | vb)) continue;  // v must be a petal vertex
            // choose k-2 more petal vertices outside e and v
            std::vector<int> others;
            for (int w = 1; w <= n; ++w)
                if (!has_vertex(e | vb, w) && h.has_edge(kernel | vertex_bit(w)))
                    others.push_back(w);
            raw += binomial(static_cast<std::int64_t>(others.size()), k - 2);
        }
    }
    return raw;
}

SuiteResult suite_count_recursion(std::uint64_t seed, std::uint64_t trials) {
    SuiteResult res;
    res.name = "lemma31";
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int r = rand_in(rng, 2, 4);
        const int n = rand_in(rng, std::max(r + 1, 4), 9);
        const Hypergraph h = random_hypergraph(rng, n, r);
        const int v = rand_in(rng, 1, n);
        const int k = rand_in(rng, 2, 3);
        bool ok = count_recursion_check(h, v, 1);  // exact identity
        ok = ok && count_recursion_check(h, v, k);
        const CountBreakdown bd = count_breakdown(h, v, k);
        ok = ok && bd.total() == count_sunflowers(h, r - 1, k);
        ok = ok &&
             bd.petal_at * static_cast<std::uint64_t>(k - 1) == three_step_enumeration(h, v, k);
        if (ok)
            ++res.pass;
        else
            note_failure(res, "recursion failed: n=" + std::to_string(n) +
                                  " r=" + std::to_string(r) + " v=" + std::to_string(v) +
                                  " k=" + std::to_string(k));
    }
    return res;
}

SuiteResult suite_formulas(std::uint64_t, std::uint64_t) {
    SuiteResult res;
    res.name = "formulas";
    for (int r = 2; r <= 4; ++r) {
        for (int n = r; n <= 12; ++n) {
            for (int s = 1; s <= 3; ++s) {
                for (int k = 1; k <= 3; ++k) {
                    const std::uint64_t expect =
                        count_sunflowers(star_extremal(n, r, s), r - 1, k);
                    if (star_count_formula(n, r, s, k) == expect)
                        ++res.pass;
                    else
                        note_failure(res, "star formula: n=" + std::to_string(n) +
                                              " r=" + std::to_string(r) +
                                              " s=" + std::to_string(s) +
                                              " k=" + std::to_string(k));
                }
            }
        }
    }
    for (int s = 2; s <= 3; ++s) {
        const int r = 3;
        for (int n = (s - 1) * r + 1; n <= 10; ++n) {
            for (int k = 2; k <= 3; ++k) {
                const std::uint64_t expect =
                    count_sunflowers(cover2_extremal(n, r, s), r - 1, k);
                if (cover2_count_formula(n, r, s, k) == expect)
                    ++res.pass;
                else
                    note_failure(res, "cover2 formula: n=" + std::to_string(n) +
                                          " s=" + std::to_string(s) +
                                          " k=" + std::to_string(k));
            }
        }
    }
    return res;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"lemma21", "lemma24", "phi-injective", "identity11", "lemma31", "formulas"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::uint64_t trials) {
    if (name == "lemma21") return suite_shift_matching(seed, trials);
    if (name == "lemma24") return suite_shift_sunflowers(seed, trials);
    if (name == "phi-injective") return suite_transport(seed, trials);
    if (name == "identity11") return suite_norm_identity(seed, trials);
    if (name == "lemma31") return suite_count_recursion(seed, trials);
    if (name == "formulas") return suite_formulas(seed, trials);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace hypershift
