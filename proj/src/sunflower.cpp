#include "hypershift/sunflower.hpp"

#include <algorithm>

#include "subset_iter.hpp"

namespace hypershift {

namespace {

void check_params(const Hypergraph& h, int t, int k) {
    if (k < 1) throw std::invalid_argument("sunflower count: need k >= 1");
    if (t < 0 || t >= std::max(h.uniformity(), 1))
        throw std::invalid_argument("sunflower count: need 0 <= t <= r-1");
}

std::uint64_t count_disjoint_ktuples(const std::vector<VertexSet>& petals,
                                     std::size_t from, VertexSet used, int k) {
    if (k == 0) return 1;
    if (petals.size() < from + static_cast<std::size_t>(k)) return 0;
    std::uint64_t total = 0;
    for (std::size_t idx = from; idx + static_cast<std::size_t>(k) <= petals.size();
         ++idx) {
        if (petals[idx] & used) continue;
        total += count_disjoint_ktuples(petals, idx + 1, used | petals[idx], k - 1);
    }
    return total;
}

VertexSet lowest_bits_of(VertexSet e, int t) {
    VertexSet out = 0;
    for (int q = 0; q < t && e; ++q) {
        const VertexSet low = e & (~e + 1);
        out |= low;
        e ^= low;
    }
    return out;
}

}  // namespace

std::uint64_t CountBreakdown::total() const {
    return checked_add(checked_add(not_containing, core_at), petal_at);
}

std::uint64_t count_sunflowers(const Hypergraph& h, int t, int k) {
    check_params(h, t, k);
    if (k == 1) return h.edge_count();  // a single petal is just a hyperedge
    const int r = h.uniformity();
    std::uint64_t total = 0;
    if (t == r - 1) {
        // petals are single vertices: C(d(T), k) per kernel
        detail::for_each_subset(h.vertex_count(), t, [&](VertexSet kernel) {
            const std::uint64_t d = degree(h, kernel);
            if (d >= static_cast<std::uint64_t>(k))
                total = checked_add(total, binomial(static_cast<std::int64_t>(d), k));
        });
        return total;
    }
    detail::for_each_subset(h.vertex_count(), t, [&](VertexSet kernel) {
        std::vector<VertexSet> petals;
        for (VertexSet e : h.edges())
            if ((e & kernel) == kernel) petals.push_back(e & ~kernel);
        if (petals.size() < static_cast<std::size_t>(k)) return;
        total = checked_add(total, count_disjoint_ktuples(petals, 0, 0, k));
    });
    return total;
}

void for_each_sunflower(const Hypergraph& h, int t, int k,
                        const std::function<void(const Sunflower&)>& fn) {
    check_params(h, t, k);
    if (k == 1) {
        for (VertexSet e : h.edges()) {
            Sunflower f;
            f.core = lowest_bits_of(e, t);  // canonical designated core
            f.petals = {e};
            fn(f);
        }
        return;
    }
    detail::for_each_subset(h.vertex_count(), t, [&](VertexSet kernel) {
        std::vector<VertexSet> members;  // full edges containing the kernel
        for (VertexSet e : h.edges())
            if ((e & kernel) == kernel) members.push_back(e);
        if (members.size() < static_cast<std::size_t>(k)) return;
        std::vector<VertexSet> chosen;
        std::function<void(std::size_t, VertexSet)> pick = [&](std::size_t from,
                                                               VertexSet used) {
            if (static_cast<int>(chosen.size()) == k) {
                Sunflower f;
                f.core = kernel;
                f.petals = chosen;
                fn(f);
                return;
            }
            const int left = k - static_cast<int>(chosen.size());
            for (std::size_t idx = from;
                 idx + static_cast<std::size_t>(left) <= members.size(); ++idx) {
                const VertexSet outside = members[idx] & ~kernel;
                if (outside & used) continue;
                chosen.push_back(members[idx]);
                pick(idx + 1, used | outside);
                chosen.pop_back();
            }
        };
        pick(0, 0);
    });
}

std::vector<Sunflower> enumerate_sunflowers(const Hypergraph& h, int t, int k) {
    std::vector<Sunflower> out;
    for_each_sunflower(h, t, k, [&](const Sunflower& f) { out.push_back(f); });
    return out;
}

std::uint64_t count_via_degrees(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("count_via_degrees: need k >= 1");
    const int r = h.uniformity();
    if (r < 1) return 0;
    std::uint64_t total = 0;
    detail::for_each_subset(h.vertex_count(), r - 1, [&](VertexSet kernel) {
        const std::uint64_t d = degree(h, kernel);
        total = checked_add(total, binomial(static_cast<std::int64_t>(d), k));
    });
    return total;
}

CountBreakdown count_breakdown(const Hypergraph& h, int v, int k) {
    if (k < 2)
        throw std::invalid_argument("count_breakdown: need k >= 2 (k = 1 is the exact "
                                    "deletion-link identity)");
    if (v < 1 || v > h.vertex_count())
        throw std::invalid_argument("count_breakdown: vertex out of range");
    const int r = h.uniformity();
    if (r < 2) throw std::invalid_argument("count_breakdown: need r >= 2");

    CountBreakdown out;
    out.not_containing = count_sunflowers(delete_vertices(h, vertex_bit(v)), r - 1, k);
    out.core_at = count_sunflowers(link(h, v), r - 2, k);

    // copies with v as a petal vertex: kernel T avoiding v with T+v an edge,
    // v plus k-1 of the other d(T)-1 petal vertices
    const VertexSet vb = vertex_bit(v);
    std::uint64_t petal = 0;
    detail::for_each_subset(h.vertex_count(), r - 1, [&](VertexSet kernel) {
        if (kernel & vb) return;
        if (!h.has_edge(kernel | vb)) return;
        const std::uint64_t d = degree(h, kernel);
        petal = checked_add(petal, binomial(static_cast<std::int64_t>(d) - 1, k - 1));
    });
    out.petal_at = petal;
    return out;
}

bool count_recursion_check(const Hypergraph& h, int v, int k) {
    if (v < 1 || v > h.vertex_count())
        throw std::invalid_argument("count_recursion_check: vertex out of range");
    const int r = h.uniformity();
    if (r < 2) throw std::invalid_argument("count_recursion_check: need r >= 2");
    const Hypergraph without = delete_vertices(h, vertex_bit(v));
    if (k == 1)
        return h.edge_count() == without.edge_count() + link(h, v).edge_count();

    const std::uint64_t total = count_sunflowers(h, r - 1, k);
    const std::uint64_t off = count_sunflowers(without, r - 1, k);
    const std::uint64_t at_core = count_sunflowers(link(h, v), r - 2, k);
    // compare (k-1) * N <= (k-1) * (off + at_core) + e(H-v) * r * C(n-r-1, k-2)
    const std::uint64_t km1 = static_cast<std::uint64_t>(k - 1);
    const std::uint64_t lhs = checked_mul(km1, total);
    const std::uint64_t petal_term =
        checked_mul(checked_mul(without.edge_count(), static_cast<std::uint64_t>(r)),
                    binomial(h.vertex_count() - r - 1, k - 2));
    const std::uint64_t rhs =
        checked_add(checked_mul(km1, checked_add(off, at_core)), petal_term);
    return lhs <= rhs;
}

bool is_sunflower_copy(const Hypergraph& h, const Sunflower& f, int t) {
    const int k = f.petal_count();
    if (k < 1) return false;
    for (VertexSet e : f.petals)
        if (!h.has_edge(e)) return false;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (f.petals[static_cast<std::size_t>(a)] ==
                f.petals[static_cast<std::size_t>(b)])
                return false;
    if (k == 1) return set_size(f.petals[0]) == h.uniformity();
    const VertexSet common = f.petals[0] & f.petals[1];
    if (set_size(common) != t) return false;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if ((f.petals[static_cast<std::size_t>(a)] &
                 f.petals[static_cast<std::size_t>(b)]) != common)
                return false;
    return true;
}

}  // namespace hypershift
