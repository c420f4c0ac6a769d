#include "hypershift/matching.hpp"

#include <algorithm>
#include <functional>

namespace hypershift {

namespace {

int branch_and_bound(const std::vector<VertexSet>& rem, int size, int r, int& best,
                     int stop_at) {
    if (size > best) best = size;
    if (stop_at >= 0 && best >= stop_at) return best;
    if (rem.empty()) return best;
    VertexSet covered = 0;
    for (VertexSet e : rem) covered |= e;
    if (size + set_size(covered) / std::max(r, 1) <= best) return best;

    const int v = lowest_vertex(covered);
    const VertexSet vb = vertex_bit(v);
    // use one of the edges at v ...
    for (std::size_t idx = 0; idx < rem.size(); ++idx) {
        if (!(rem[idx] & vb)) continue;
        std::vector<VertexSet> next;
        next.reserve(rem.size());
        for (VertexSet f : rem)
            if (!(f & rem[idx])) next.push_back(f);
        branch_and_bound(next, size + 1, r, best, stop_at);
        if (stop_at >= 0 && best >= stop_at) return best;
    }
    // ... or none of them
    std::vector<VertexSet> rest;
    rest.reserve(rem.size());
    for (VertexSet f : rem)
        if (!(f & vb)) rest.push_back(f);
    return branch_and_bound(rest, size, r, best, stop_at);
}

int greedy_matching(const std::vector<VertexSet>& edges) {
    VertexSet used = 0;
    int size = 0;
    for (VertexSet e : edges)
        if (!(e & used)) {
            used |= e;
            ++size;
        }
    return size;
}

}  // namespace

int max_matching_size(const std::vector<VertexSet>& edges, int r, int stop_at) {
    int best = 0;
    if (stop_at >= 0 && greedy_matching(edges) >= stop_at) return stop_at;
    branch_and_bound(edges, 0, r, best, stop_at);
    return best;
}

MatchingResult matching_number(const Hypergraph& h) {
    const int r = h.uniformity();
    const int nu = max_matching_size(h.edges(), r);
    MatchingResult out;
    out.size = nu;

    // Lexicographically least witness: grow the sorted witness greedily,
    // keeping each edge only if a maximum matching can still be completed
    // from strictly later, disjoint edges.
    const auto& all = h.edges();
    VertexSet used = 0;
    std::size_t start = 0;
    while (static_cast<int>(out.witness.size()) < nu) {
        bool advanced = false;
        for (std::size_t idx = start; idx < all.size(); ++idx) {
            if (all[idx] & used) continue;
            std::vector<VertexSet> rest;
            for (std::size_t jdx = idx + 1; jdx < all.size(); ++jdx)
                if (!(all[jdx] & (used | all[idx]))) rest.push_back(all[jdx]);
            const int need = nu - static_cast<int>(out.witness.size()) - 1;
            if (max_matching_size(rest, r, need) >= need) {
                out.witness.push_back(all[idx]);
                used |= all[idx];
                start = idx + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw std::logic_error("matching witness reconstruction failed");
    }
    return out;
}

bool has_matching_of_size(const Hypergraph& h, int s) {
    if (s <= 0) return true;
    return max_matching_size(h.edges(), h.uniformity(), s) >= s;
}

bool is_matching_free(const Hypergraph& h, int s) {
    if (s < 1) throw std::invalid_argument("is_matching_free: need s >= 1");
    return !has_matching_of_size(h, s);
}

bool contains_subhypergraph(const Hypergraph& h, const Hypergraph& pattern) {
    if (pattern.uniformity() != h.uniformity())
        throw std::invalid_argument("contains_subhypergraph: uniformity mismatch");
    if (pattern.edge_count() > 6)
        throw guard_error("contains_subhypergraph guarded to patterns with <= 6 edges");
    if (pattern.edge_count() == 0) return true;
    if (h.edge_count() < pattern.edge_count()) return false;

    const auto& pe = pattern.edges();
    const auto& he = h.edges();
    std::vector<int> img(static_cast<std::size_t>(pattern.vertex_count()) + 1, 0);
    VertexSet taken = 0;  // vertices of h already used as images

    std::function<bool(std::size_t)> embed = [&](std::size_t t) -> bool {
        if (t == pe.size()) return true;
        const auto pverts = to_vertices(pe[t]);
        for (VertexSet target : he) {
            VertexSet mapped_to = 0;
            bool fits = true;
            std::vector<int> free_p;
            for (int pv : pverts) {
                if (img[static_cast<std::size_t>(pv)]) {
                    if (!has_vertex(target, img[static_cast<std::size_t>(pv)])) {
                        fits = false;
                        break;
                    }
                    mapped_to |= vertex_bit(img[static_cast<std::size_t>(pv)]);
                } else {
                    free_p.push_back(pv);
                }
            }
            if (!fits) continue;
            const VertexSet free_slots = target & ~mapped_to;
            if (free_slots & taken) continue;  // would collide with another image
            auto slots = to_vertices(free_slots);
            // try every bijection of the unmapped pattern vertices onto the
            // free slots of the target edge
            std::sort(slots.begin(), slots.end());
            do {
                for (std::size_t q = 0; q < free_p.size(); ++q)
                    img[static_cast<std::size_t>(free_p[q])] = slots[q];
                taken |= free_slots;
                if (embed(t + 1)) return true;
                taken &= ~free_slots;
                for (int pv : free_p) img[static_cast<std::size_t>(pv)] = 0;
            } while (std::next_permutation(slots.begin(), slots.end()));
        }
        return false;
    };
    return embed(0);
}

std::uint64_t count_complete_subgraphs(const Hypergraph& h, int t) {
    const int r = h.uniformity();
    if (t < r) throw std::invalid_argument("count_complete_subgraphs: need t >= r");
    std::uint64_t count = 0;
    const int n = h.vertex_count();
    std::function<void(int, int, std::vector<int>&)> choose = [&](int next, int left,
                                                                  std::vector<int>& acc) {
        if (left == 0) {
            // all r-subsets of acc must be edges
            std::function<bool(int, int, VertexSet)> sub = [&](int from, int rem,
                                                               VertexSet cur) -> bool {
                if (rem == 0) return h.has_edge(cur);
                for (int p = from; p <= static_cast<int>(acc.size()) - rem; ++p)
                    if (!sub(p + 1, rem - 1, cur | vertex_bit(acc[static_cast<std::size_t>(p)])))
                        return false;
                return true;
            };
            if (sub(0, r, 0)) ++count;
            return;
        }
        for (int v = next; v <= n - left + 1; ++v) {
            acc.push_back(v);
            choose(v + 1, left - 1, acc);
            acc.pop_back();
        }
    };
    std::vector<int> acc;
    choose(1, t, acc);
    return count;
}

Hypergraph expansion(int base_n, const std::vector<std::pair<int, int>>& base_edges,
                     int r) {
    if (r < 2) throw std::invalid_argument("expansion: need r >= 2");
    const int fresh_per_edge = r - 2;
    const int n = base_n + fresh_per_edge * static_cast<int>(base_edges.size());
    std::vector<std::vector<int>> edges;
    int next_fresh = base_n + 1;
    for (auto [a, b] : base_edges) {
        std::vector<int> e = {a, b};
        for (int q = 0; q < fresh_per_edge; ++q) e.push_back(next_fresh++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_vertex_lists(n, r, edges);
}

Hypergraph path_pattern(int ell, int r) {
    if (ell < 1) throw std::invalid_argument("path_pattern: need ell >= 1");
    std::vector<std::pair<int, int>> base;
    for (int q = 1; q <= ell; ++q) base.emplace_back(q, q + 1);
    return expansion(ell + 1, base, r);
}

Hypergraph cycle_pattern(int ell, int r) {
    if (ell < 3) throw std::invalid_argument("cycle_pattern: need ell >= 3");
    std::vector<std::pair<int, int>> base;
    for (int q = 1; q < ell; ++q) base.emplace_back(q, q + 1);
    base.emplace_back(1, ell);
    return expansion(ell, base, r);
}

Hypergraph star_pattern(int ell, int r) {
    if (ell < 1) throw std::invalid_argument("star_pattern: need ell >= 1");
    std::vector<std::pair<int, int>> base;
    for (int q = 1; q <= ell; ++q) base.emplace_back(1, q + 1);
    return expansion(ell + 1, base, r);
}

Hypergraph clique_pattern(int t, int r) {
    if (t < 2) throw std::invalid_argument("clique_pattern: need t >= 2");
    std::vector<std::pair<int, int>> base;
    for (int a = 1; a <= t; ++a)
        for (int b = a + 1; b <= t; ++b) base.emplace_back(a, b);
    return expansion(t, base, r);
}

Hypergraph matching_pattern(int s, int r) {
    if (s < 1) throw std::invalid_argument("matching_pattern: need s >= 1");
    std::vector<std::pair<int, int>> base;
    for (int q = 0; q < s; ++q) base.emplace_back(2 * q + 1, 2 * q + 2);
    return expansion(2 * s, base, r);
}

}  // namespace hypershift
