#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hypershift/hypergraph.hpp"

namespace hypershift {

// A sunflower copy: k petal edges whose pairwise intersections all equal the
// core. Copies are identified by their petal set; `petals` is kept sorted.
// For k = 1 any core works, so a canonical one (the lowest t vertices of the
// single edge) is stored.
struct Sunflower {
    VertexSet core = 0;
    std::vector<VertexSet> petals;

    int petal_count() const { return static_cast<int>(petals.size()); }
    bool operator==(const Sunflower& o) const { return petals == o.petals; }
};

// The three disjoint classes of copies relative to a vertex v: copies
// avoiding v, copies with v in the core, copies with v as a petal vertex.
struct CountBreakdown {
    std::uint64_t not_containing = 0;
    std::uint64_t core_at = 0;
    std::uint64_t petal_at = 0;

    std::uint64_t total() const;
};

// N(S_{t,k}^r, H): exact number of k-petal sunflower copies with kernel size
// t. For each t-set T the petals { e \ T : T ⊆ e } form an (r-t)-uniform
// family; copies with core T are its k-matchings, which for t = r-1 is just
// C(d(T), k). t = 0 is allowed (copies are k pairwise-disjoint edges); the
// deletion-link recursion needs it when r = 2.
std::uint64_t count_sunflowers(const Hypergraph& h, int t, int k);

// Visit every copy exactly once, in deterministic order (cores ascending,
// petal choices lexicographic). Count always matches count_sunflowers.
void for_each_sunflower(const Hypergraph& h, int t, int k,
                        const std::function<void(const Sunflower&)>& fn);
std::vector<Sunflower> enumerate_sunflowers(const Hypergraph& h, int t, int k);

// Sum over all (r-1)-sets T of C(d(T), k). Equals N(S_{r-1,k}^r, H) for
// k >= 2 and r*e(H) for k = 1.
std::uint64_t count_via_degrees(const Hypergraph& h, int k);

// Exact three-way breakdown of the S_{r-1,k}^r copies relative to vertex v,
// each class computed independently (k >= 2). The parts always sum to
// count_sunflowers(h, r-1, k).
CountBreakdown count_breakdown(const Hypergraph& h, int v, int k);

// The deletion-link counting recursion at vertex v:
//   k = 1:  N = N(H - v) + N(kernel r-2 in link)        (exact equality)
//   k >= 2: N <= N(H - v) + N(link) + e(H - v) * r/(k-1) * C(n-r-1, k-2)
// The k >= 2 comparison is done exactly after clearing the k-1 denominator.
bool count_recursion_check(const Hypergraph& h, int v, int k);

// Is F a valid sunflower copy with kernel size t inside H?
bool is_sunflower_copy(const Hypergraph& h, const Sunflower& f, int t);

}  // namespace hypershift
