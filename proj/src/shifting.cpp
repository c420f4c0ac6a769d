#include "hypershift/shifting.hpp"

#include <algorithm>
#include <set>

namespace hypershift {

namespace {

void check_pair(const Hypergraph& h, ShiftPair p) {
    if (p.i < 1 || p.j <= p.i || p.j > h.vertex_count())
        throw std::invalid_argument("shift pair must satisfy 1 <= i < j <= n");
}

VertexSet replace_j_by_i(VertexSet e, ShiftPair p) {
    return (e ^ vertex_bit(p.j)) | vertex_bit(p.i);
}

}  // namespace

VertexSet shift_edge(const Hypergraph& h, ShiftPair p, VertexSet e) {
    check_pair(h, p);
    if (!h.has_edge(e)) throw std::invalid_argument("shift_edge: e is not an edge of H");
    if (!has_vertex(e, p.j) || has_vertex(e, p.i)) return e;
    const VertexSet moved = replace_j_by_i(e, p);
    return h.has_edge(moved) ? e : moved;
}

std::pair<Hypergraph, std::size_t> shift_with_count(const Hypergraph& h, ShiftPair p) {
    check_pair(h, p);
    std::vector<VertexSet> out;
    out.reserve(h.edge_count());
    std::size_t moved = 0;
    for (VertexSet e : h.edges()) {
        VertexSet img = e;
        if (has_vertex(e, p.j) && !has_vertex(e, p.i)) {
            const VertexSet cand = replace_j_by_i(e, p);
            if (!h.has_edge(cand)) {
                img = cand;
                ++moved;
            }
        }
        out.push_back(img);
    }
    Hypergraph shifted(h.vertex_count(), h.uniformity(), std::move(out));
    if (shifted.edge_count() != h.edge_count())
        throw std::logic_error("shift lost an edge; the operator must be a bijection");
    return {std::move(shifted), moved};
}

Hypergraph shift(const Hypergraph& h, ShiftPair p) { return shift_with_count(h, p).first; }

bool is_shifted(const Hypergraph& h) {
    // Fixpoint for every pair: whenever j in e, i < j, i not in e, the
    // replacement edge must already be present (otherwise S_ij would move e).
    for (VertexSet e : h.edges()) {
        for (VertexSet rest = e; rest; rest &= rest - 1) {
            const int j = std::countr_zero(rest) + 1;
            for (int i = 1; i < j; ++i) {
                if (has_vertex(e, i)) continue;
                if (!h.has_edge((e ^ vertex_bit(j)) | vertex_bit(i))) return false;
            }
        }
    }
    return true;
}

std::pair<Hypergraph, ShiftTrace> shift_to_stable(const Hypergraph& h) {
    Hypergraph cur = h;
    ShiftTrace trace;
    const int n = cur.vertex_count();
    bool moved_any = true;
    while (moved_any) {
        moved_any = false;
        for (int i = 1; i <= n - 1 && !moved_any; ++i) {
            for (int j = i + 1; j <= n && !moved_any; ++j) {
                auto [next, moved] = shift_with_count(cur, ShiftPair{i, j});
                if (moved > 0) {
                    trace.steps.push_back(ShiftStep{ShiftPair{i, j}, moved});
                    cur = std::move(next);
                    moved_any = true;  // restart the sweep
                }
            }
        }
    }
    return {std::move(cur), std::move(trace)};
}

namespace {

Sunflower finalize_copy(std::vector<VertexSet> petals, int t) {
    Sunflower out;
    std::sort(petals.begin(), petals.end());
    if (petals.size() >= 2) {
        out.core = petals[0] & petals[1];
    } else {
        VertexSet e = petals[0];
        VertexSet core = 0;
        for (int q = 0; q < t && e; ++q) {
            const VertexSet low = e & (~e + 1);
            core |= low;
            e ^= low;
        }
        out.core = core;
    }
    out.petals = std::move(petals);
    return out;
}

}  // namespace

namespace {

Sunflower transport_against(const Hypergraph& h, const Hypergraph& shifted, ShiftPair p,
                            const Sunflower& f) {
    check_pair(h, p);
    const int r = h.uniformity();
    const int t = r - 1;
    if (!is_sunflower_copy(h, f, t))
        throw std::invalid_argument("transport_sunflower: F is not a kernel-(r-1) copy in H");

    const int k = f.petal_count();
    // For a single petal the copy is just an edge and travels with it.
    // Otherwise the core is forced by the petals.
    VertexSet core;
    if (k >= 2) {
        core = f.petals[0] & f.petals[1];
    } else {
        core = (set_size(f.core) == t && (f.core & f.petals[0]) == f.core)
                   ? f.core
                   : finalize_copy({f.petals[0]}, t).core;
    }
    VertexSet all = 0;
    for (VertexSet e : f.petals) all |= e;
    const VertexSet petal_verts = all & ~core;
    const int i = p.i;
    const int j = p.j;

    auto find_petal_with = [&](int v) {
        for (std::size_t idx = 0; idx < f.petals.size(); ++idx)
            if (has_vertex(f.petals[idx], v)) return idx;
        throw std::logic_error("transport_sunflower: vertex not on any petal");
    };

    std::vector<VertexSet> image;
    if (!has_vertex(all, j)) {
        image = f.petals;  // untouched
    } else if (has_vertex(core, j)) {
        if (has_vertex(core, i)) {
            image = f.petals;
        } else if (has_vertex(petal_verts, i)) {
            // i is the petal vertex of exactly one edge e_x; the other edges
            // swap j for i unless every replacement already exists in H
            const std::size_t x = find_petal_with(i);
            bool all_present = true;
            for (std::size_t m = 0; m < f.petals.size(); ++m) {
                if (m == x) continue;
                if (!h.has_edge(replace_j_by_i(f.petals[m], p))) {
                    all_present = false;
                    break;
                }
            }
            if (all_present) {
                image = f.petals;
            } else {
                image.push_back(f.petals[x]);
                for (std::size_t m = 0; m < f.petals.size(); ++m)
                    if (m != x) image.push_back(replace_j_by_i(f.petals[m], p));
            }
        } else {
            // i outside the copy, j in the core: the whole copy swaps
            bool all_present = true;
            for (VertexSet e : f.petals)
                if (!h.has_edge(replace_j_by_i(e, p))) {
                    all_present = false;
                    break;
                }
            if (all_present) {
                image = f.petals;
            } else {
                for (VertexSet e : f.petals) image.push_back(replace_j_by_i(e, p));
            }
        }
    } else {
        // j is a petal vertex, on exactly one edge e_x
        if (has_vertex(core, i) || has_vertex(petal_verts, i)) {
            image = f.petals;
        } else {
            const std::size_t x = find_petal_with(j);
            const VertexSet moved = replace_j_by_i(f.petals[x], p);
            if (h.has_edge(moved)) {
                image = f.petals;
            } else {
                image.push_back(moved);
                for (std::size_t m = 0; m < f.petals.size(); ++m)
                    if (m != x) image.push_back(f.petals[m]);
            }
        }
    }

    Sunflower out = finalize_copy(std::move(image), t);
    if (!is_sunflower_copy(shifted, out, t))
        throw std::logic_error("transport_sunflower produced an invalid copy");
    return out;
}

}  // namespace

Sunflower transport_sunflower(const Hypergraph& h, ShiftPair p, const Sunflower& f) {
    return transport_against(h, shift(h, p), p, f);
}

bool verify_transport_injective(const Hypergraph& h, ShiftPair p, int k) {
    check_pair(h, p);
    const int r = h.uniformity();
    if (r < 1 || k < 1) throw std::invalid_argument("verify_transport_injective: bad params");
    const Hypergraph shifted = shift(h, p);
    std::set<std::vector<VertexSet>> images;
    bool ok = true;
    std::uint64_t copies = 0;
    for_each_sunflower(h, r - 1, k, [&](const Sunflower& f) {
        if (!ok) return;
        ++copies;
        Sunflower img;
        try {
            img = transport_against(h, shifted, p, f);
        } catch (const std::logic_error&) {
            ok = false;
            return;
        }
        if (!is_sunflower_copy(shifted, img, r - 1)) {
            ok = false;
            return;
        }
        if (!images.insert(img.petals).second) ok = false;  // image collision
    });
    return ok && images.size() == copies;
}

}  // namespace hypershift
