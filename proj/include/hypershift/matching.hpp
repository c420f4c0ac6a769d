#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hypershift/hypergraph.hpp"

namespace hypershift {

struct MatchingResult {
    int size = 0;                     // nu(H)
    std::vector<VertexSet> witness;   // pairwise-disjoint edges realizing nu
};

// Exact maximum matching by branch and bound (branch on the lowest vertex
// still covered by a remaining edge). The witness is the lexicographically
// least maximum matching, so outputs are deterministic.
MatchingResult matching_number(const Hypergraph& h);

// nu(H) >= s? Early-exits as soon as s disjoint edges are found.
bool has_matching_of_size(const Hypergraph& h, int s);

// M_s-freeness: nu(H) < s.
bool is_matching_free(const Hypergraph& h, int s);

// Exact maximum matching size over a raw edge list (r = uniformity, used for
// the branch-and-bound vertex bound). stop_at >= 0 turns the search into a
// decision procedure that stops once stop_at is reached.
int max_matching_size(const std::vector<VertexSet>& edges, int r, int stop_at = -1);

// Does H contain `pattern` as a subhypergraph (injective vertex map sending
// every pattern edge to an edge of H)? Patterns are tiny; guarded to 6 edges.
bool contains_subhypergraph(const Hypergraph& h, const Hypergraph& pattern);

// N(K_t^(r), H): number of t-subsets of [n] all of whose r-subsets are edges.
// Exhaustive; meant for tiny instances only.
std::uint64_t count_complete_subgraphs(const Hypergraph& h, int t);

// r-expansion of a base graph: every base edge {a, b} gets r-2 fresh
// vertices of its own. Base vertices keep labels 1..base_n; fresh vertices
// are appended after them.
Hypergraph expansion(int base_n, const std::vector<std::pair<int, int>>& base_edges, int r);

Hypergraph path_pattern(int ell, int r);      // P_ell expansion
Hypergraph cycle_pattern(int ell, int r);     // C_ell expansion, ell >= 3
Hypergraph star_pattern(int ell, int r);      // S_ell expansion
Hypergraph clique_pattern(int t, int r);      // K_t (graph) expansion
Hypergraph matching_pattern(int s, int r);    // M_s expansion: s disjoint edges

}  // namespace hypershift
