#include "hypershift/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "subset_iter.hpp"

namespace hypershift {

std::vector<int> to_vertices(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

VertexSet from_vertices(const std::vector<int>& vs, int n) {
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 1 || v > n)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range [1, " + std::to_string(n) + "]");
        s |= vertex_bit(v);
    }
    return s;
}

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges) : n_(n), r_(r) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > kMaxVertices)
        throw guard_error("vertex count " + std::to_string(n) + " exceeds word width " +
                          std::to_string(kMaxVertices));
    if (r < 0) throw std::invalid_argument("uniformity must be non-negative");
    if (!edges.empty() && r > n)
        throw std::invalid_argument("uniformity " + std::to_string(r) +
                                    " exceeds vertex count " + std::to_string(n));
    const VertexSet allowed = prefix_set(n);
    for (VertexSet e : edges) {
        if (e & ~allowed)
            throw std::invalid_argument("edge contains a vertex outside [1, " +
                                        std::to_string(n) + "]");
        if (set_size(e) != r)
            throw std::invalid_argument("edge has " + std::to_string(set_size(e)) +
                                        " vertices, expected " + std::to_string(r));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

Hypergraph Hypergraph::from_vertex_lists(int n, int r,
                                         const std::vector<std::vector<int>>& edges) {
    std::vector<VertexSet> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) {
        VertexSet m = from_vertices(e, n);
        if (set_size(m) != static_cast<int>(e.size()))
            throw std::invalid_argument("edge has a repeated vertex");
        masks.push_back(m);
    }
    return Hypergraph(n, r, std::move(masks));
}

bool Hypergraph::has_edge(VertexSet e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph complete(int n, int r) {
    if (r < 0 || r > n)
        throw std::invalid_argument("complete: need 0 <= r <= n");
    std::vector<VertexSet> edges;
    detail::for_each_subset(n, r, [&](VertexSet e) { edges.push_back(e); });
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph star_extremal(int n, int r, int s) {
    if (r < 1 || r > n) throw std::invalid_argument("star_extremal: need 1 <= r <= n");
    if (s < 1) throw std::invalid_argument("star_extremal: need s >= 1");
    const VertexSet window = prefix_set(s - 1);
    std::vector<VertexSet> edges;
    detail::for_each_subset(n, r, [&](VertexSet e) {
        if (e & window) edges.push_back(e);
    });
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph cover2_extremal(int n, int r, int s) {
    if (r < 2) throw std::invalid_argument("cover2_extremal: need r >= 2");
    if (s < 1) throw std::invalid_argument("cover2_extremal: need s >= 1");
    const int w = (s - 1) * r + 1;
    if (n < w)
        throw std::invalid_argument("cover2_extremal: need n >= (s-1)r + 1 = " +
                                    std::to_string(w));
    const VertexSet window = prefix_set(w);
    std::vector<VertexSet> edges;
    detail::for_each_subset(n, r, [&](VertexSet e) {
        if (set_size(e & window) >= 2) edges.push_back(e);
    });
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph delete_vertices(const Hypergraph& h, VertexSet u) {
    if (u & ~h.vertex_mask())
        throw std::invalid_argument("delete_vertices: U not within [1, n]");
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges())
        if (!(e & u)) edges.push_back(e);
    return Hypergraph(h.vertex_count(), h.uniformity(), std::move(edges));
}

Hypergraph link(const Hypergraph& h, int v) {
    if (v < 1 || v > h.vertex_count())
        throw std::invalid_argument("link: vertex out of range");
    if (h.uniformity() < 2)
        throw std::invalid_argument("link: uniformity must be at least 2");
    const VertexSet bit = vertex_bit(v);
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges())
        if (e & bit) edges.push_back(e ^ bit);
    return Hypergraph(h.vertex_count(), h.uniformity() - 1, std::move(edges));
}

std::uint64_t degree(const Hypergraph& h, VertexSet t) {
    std::uint64_t d = 0;
    for (VertexSet e : h.edges())
        if ((e & t) == t) ++d;
    return d;
}

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
    const int n = h.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation must have length n");
    VertexSet seen = 0;
    for (int img : perm) {
        if (img < 1 || img > n)
            throw std::invalid_argument("relabel: image out of range");
        seen |= vertex_bit(img);
    }
    if (set_size(seen) != n)
        throw std::invalid_argument("relabel: not a bijection");
    std::vector<VertexSet> edges;
    edges.reserve(h.edge_count());
    for (VertexSet e : h.edges()) {
        VertexSet img = 0;
        for (int v : to_vertices(e)) img |= vertex_bit(perm[v - 1]);
        edges.push_back(img);
    }
    return Hypergraph(n, h.uniformity(), std::move(edges));
}

std::vector<VertexSet> canonical_form(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n > kCanonicalGuard)
        throw guard_error("canonical_form guarded to n <= " +
                          std::to_string(kCanonicalGuard));
    const auto& all = h.edges();
    if (all.empty()) return {};

    // Seed with the identity labeling, then search assignments of original
    // vertices to new labels 1..n. An edge's final mask is known once all its
    // vertices are labeled, and edges complete in ascending mask order, so
    // the running encoding is always a prefix of the final sorted encoding.
    // Every node compares its whole prefix against the current best: a
    // greater prefix can never recover, and dropping best mid-search only
    // strengthens the prune.
    std::vector<VertexSet> best = all;
    std::vector<int> newlabel(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    std::vector<VertexSet> enc;
    enc.reserve(all.size());

    auto prefix_cmp = [&]() {  // enc vs best's leading entries
        for (std::size_t idx = 0; idx < enc.size(); ++idx) {
            if (enc[idx] < best[idx]) return -1;
            if (enc[idx] > best[idx]) return 1;
        }
        return 0;
    };

    std::function<void(int)> assign = [&](int depth) {
        const int cmp = prefix_cmp();
        if (cmp > 0) return;
        if (depth == n) {
            if (cmp < 0) best = enc;
            return;
        }
        for (int o = 1; o <= n; ++o) {
            if (used[o]) continue;
            used[o] = 1;
            newlabel[o] = depth + 1;
            std::vector<VertexSet> done;
            for (VertexSet e : all) {
                if (!has_vertex(e, o)) continue;
                VertexSet img = 0;
                bool whole = true;
                for (VertexSet rest = e; rest; rest &= rest - 1) {
                    const int v = std::countr_zero(rest) + 1;
                    if (!newlabel[v]) {
                        whole = false;
                        break;
                    }
                    img |= vertex_bit(newlabel[v]);
                }
                if (whole) done.push_back(img);
            }
            std::sort(done.begin(), done.end());
            const std::size_t base = enc.size();
            enc.insert(enc.end(), done.begin(), done.end());
            assign(depth + 1);
            enc.resize(base);
            used[o] = 0;
            newlabel[o] = 0;
        }
    };
    assign(0);
    return best;
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() ||
        a.edge_count() != b.edge_count())
        return false;
    auto degseq = [](const Hypergraph& h) {
        std::vector<int> d(static_cast<std::size_t>(h.vertex_count()), 0);
        for (VertexSet e : h.edges())
            for (int v : to_vertices(e)) ++d[static_cast<std::size_t>(v - 1)];
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degseq(a) != degseq(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1, r = -1;
    std::vector<std::vector<int>> edges;

    auto tokenize = [](const std::string& s) {
        std::istringstream ls(s);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        return toks;
    };
    auto to_int = [&](const std::string& tok, int ln) {
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw parse_error("line " + std::to_string(ln) + ": '" + tok +
                              "' is not an integer");
        return value;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks.size() != 2)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": malformed header, expected 'n r'");
            n = to_int(toks[0], lineno);
            r = to_int(toks[1], lineno);
            if (n < 0 || r < 0)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": header values must be non-negative");
            continue;
        }
        if (static_cast<int>(toks.size()) != r)
            throw parse_error("line " + std::to_string(lineno) + ": edge has " +
                              std::to_string(toks.size()) + " vertices, expected " +
                              std::to_string(r));
        std::vector<int> e;
        e.reserve(toks.size());
        for (const auto& t : toks) e.push_back(to_int(t, lineno));
        edges.push_back(std::move(e));
    }
    if (n < 0) throw parse_error("missing header line 'n r'");
    try {
        return Hypergraph::from_vertex_lists(n, r, edges);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
    }
}

std::string serialize(const Hypergraph& h) {
    std::string out = std::to_string(h.vertex_count()) + " " +
                      std::to_string(h.uniformity()) + "\n";
    for (VertexSet e : h.edges()) {
        bool first = true;
        for (int v : to_vertices(e)) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace hypershift
