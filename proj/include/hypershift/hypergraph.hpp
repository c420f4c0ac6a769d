#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypershift/util.hpp"

namespace hypershift {

// Vertices are labeled 1..n; a VertexSet stores vertex v at bit v-1.
// Everything in this library lives inside one machine word (n <= 64).
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;
// canonical_form enumerates vertex assignments; keep it to factorial-feasible n.
inline constexpr int kCanonicalGuard = 10;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }
constexpr bool has_vertex(VertexSet s, int v) { return (s >> (v - 1)) & 1; }
// {1, ..., m} as a mask; empty for m <= 0.
constexpr VertexSet prefix_set(int m) {
    if (m <= 0) return 0;
    if (m >= kMaxVertices) return ~VertexSet{0};
    return (VertexSet{1} << m) - 1;
}
inline int set_size(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s) + 1; }

std::vector<int> to_vertices(VertexSet s);
VertexSet from_vertices(const std::vector<int>& vs, int n);

// An r-uniform hypergraph on vertex set [n]. Edges are deduplicated and kept
// in ascending mask order (colex order on vertex sets), so iteration order,
// equality and serialization are deterministic. Values are immutable after
// construction and freely shareable between threads.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, int r, std::vector<VertexSet> edges);

    static Hypergraph from_vertex_lists(int n, int r,
                                        const std::vector<std::vector<int>>& edges);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    bool has_edge(VertexSet e) const;
    VertexSet vertex_mask() const { return prefix_set(n_); }

    bool operator==(const Hypergraph& o) const = default;

private:
    int n_ = 0;
    int r_ = 0;
    std::vector<VertexSet> edges_;
};

// The complete r-graph on [n]: all C(n, r) r-subsets.
Hypergraph complete(int n, int r);

// The star family H*: all r-subsets of [n] meeting {1, ..., s-1}.
// Edge count is C(n,r) - C(n-s+1,r); empty for s = 1.
Hypergraph star_extremal(int n, int r, int s);

// The cover-2 family H': all r-subsets meeting the window {1, ..., (s-1)r+1}
// in at least two vertices.
Hypergraph cover2_extremal(int n, int r, int s);

// H - U: drop every edge meeting U. The label space [n] is kept (vertices in
// U become isolated) so later unions and per-vertex terms line up.
Hypergraph delete_vertices(const Hypergraph& h, VertexSet u);

// Link of v: the (r-1)-graph { e \ {v} : v in e }, on the same label space.
Hypergraph link(const Hypergraph& h, int v);

// d_H(T): number of edges containing T.
std::uint64_t degree(const Hypergraph& h, VertexSet t);

// Relabel by a permutation of [n]; perm[v-1] is the image of vertex v.
Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm);

// Minimum edge encoding over all vertex permutations. Equal encodings iff
// isomorphic. Exhaustive with prefix pruning; guarded to n <= kCanonicalGuard.
std::vector<VertexSet> canonical_form(const Hypergraph& h);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

// Text format: first line "n r", then one edge per line as r ascending
// 1-indexed vertices. '#' starts a comment line; blank lines are ignored.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize(const Hypergraph& h);

}  // namespace hypershift
