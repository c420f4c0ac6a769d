#include "hypershift/search.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <regex>
#include <thread>

#include "hypershift/matching.hpp"
#include "hypershift/norms.hpp"
#include "hypershift/sunflower.hpp"
#include "hypershift/verify.hpp"

namespace hypershift {

// ---- closed forms ------------------------------------------------------

std::uint64_t star_count_formula(int n, int r, int s, int k) {
    if (n < r || r < 2) throw std::invalid_argument("star_count_formula: need n >= r >= 2");
    if (s < 1 || k < 1) throw std::invalid_argument("star_count_formula: need s, k >= 1");
    if (k == 1) {
        // single-petal copies are plain edges; the degree sum would count
        // each edge r times
        return star_edge_bound(n, r, s);
    }
    const std::uint64_t hit_window =
        binomial(n, r - 1) - binomial(n - s + 1, r - 1);  // degree n-r+1 kernels
    const std::uint64_t miss_window = binomial(n - s + 1, r - 1);  // degree s-1 kernels
    return checked_add(checked_mul(hit_window, binomial(n - r + 1, k)),
                       checked_mul(miss_window, binomial(s - 1, k)));
}

std::uint64_t cover2_count_formula(int n, int r, int s, int k) {
    if (r < 3) throw std::invalid_argument("cover2_count_formula: need r >= 3");
    if (s < 1 || k < 1) throw std::invalid_argument("cover2_count_formula: need s, k >= 1");
    const int w = (s - 1) * r + 1;
    if (n < w)
        throw std::invalid_argument("cover2_count_formula: need n >= (s-1)r + 1");
    if (k == 1) {
        std::uint64_t edges = 0;
        for (int j = 2; j <= r; ++j)
            edges = checked_add(edges, checked_mul(binomial(w, j), binomial(n - w, r - j)));
        return edges;
    }
    std::uint64_t total = 0;
    // kernels meeting the window in >= 2 vertices: every completion is an edge
    for (int j = 2; j <= r - 1; ++j) {
        const std::uint64_t kernels = checked_mul(binomial(w, j), binomial(n - w, r - 1 - j));
        total = checked_add(total, checked_mul(kernels, binomial(n - r + 1, k)));
    }
    // kernels meeting the window in exactly one vertex: the completion must
    // land in the window too, so the degree is |W| - 1 = (s-1)r
    const std::uint64_t kernels1 = checked_mul(binomial(w, 1), binomial(n - w, r - 2));
    total = checked_add(total, checked_mul(kernels1, binomial(w - 1, k)));
    return total;
}

std::uint64_t star_edge_bound(int n, int r, int s) {
    if (n < r) throw std::invalid_argument("star_edge_bound: need n >= r");
    return binomial(n, r) - binomial(n - s + 1, r);
}

std::uint64_t emc_bound(int n, int r, int s) {
    return std::max(binomial(static_cast<std::int64_t>(s) * r - 1, r),
                    star_edge_bound(n, r, s));
}

// ---- exhaustive maximization -------------------------------------------

const char* objective_name(Objective o) {
    switch (o) {
        case Objective::SunflowerCount: return "sunflower-count";
        case Objective::Norm: return "norm";
        case Objective::EdgeCount: return "edge-count";
    }
    return "?";
}

std::optional<Objective> parse_objective(const std::string& name) {
    if (name == "sunflower-count") return Objective::SunflowerCount;
    if (name == "norm") return Objective::Norm;
    if (name == "edge-count") return Objective::EdgeCount;
    return std::nullopt;
}

namespace {

constexpr std::uint64_t kUnrestrictedGuard = 25;  // 2^25 families
constexpr std::uint64_t kShiftedGuard = 66;

// Scratch evaluator: accumulates kernel degrees of one family and folds them
// into the objective. Reused across families to avoid reallocation.
class ObjectiveEval {
public:
    ObjectiveEval(int n, int r, int k, Objective obj)
        : n_(n), r_(r), k_(k), obj_(obj) {
        if (obj_ != Objective::EdgeCount) deg_.assign(std::size_t{1} << n_, 0);
    }

    std::uint64_t value(const std::vector<VertexSet>& family) {
        if (obj_ == Objective::EdgeCount) return family.size();
        touched_.clear();
        for (VertexSet e : family) {
            for (VertexSet rest = e; rest; rest &= rest - 1) {
                const VertexSet kernel = e ^ (rest & (~rest + 1));
                if (deg_[kernel]++ == 0) touched_.push_back(kernel);
            }
        }
        std::uint64_t total = 0;
        for (VertexSet kernel : touched_) {
            const std::uint64_t d = deg_[kernel];
            deg_[kernel] = 0;
            total += obj_ == Objective::SunflowerCount
                         ? binomial(static_cast<std::int64_t>(d), k_)
                         : checked_pow(d, k_);
        }
        return total;
    }

private:
    int n_, r_, k_;
    Objective obj_;
    std::vector<std::uint32_t> deg_;
    std::vector<VertexSet> touched_;
};

bool nu_below(const std::vector<VertexSet>& family, int r, int s) {
    // cheap greedy lower bound, then the exact decision search
    VertexSet used = 0;
    int greedy = 0;
    for (VertexSet e : family)
        if (!(e & used)) {
            used |= e;
            if (++greedy >= s) return false;
        }
    return max_matching_size(family, r, s) < s;
}

struct ChunkResult {
    std::uint64_t best = 0;
    bool any = false;
    std::vector<std::uint64_t> attaining;  // family bitmaps over candidate indexes
    bool truncated = false;
    std::uint64_t explored = 0;
};

void scan_range(const std::vector<VertexSet>& cand, int n, int r, int s, int k,
                Objective obj, std::uint64_t lo, std::uint64_t hi, std::size_t cap,
                ChunkResult& out) {
    ObjectiveEval eval(n, r, k, obj);
    std::vector<VertexSet> family;
    family.reserve(cand.size());
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
        ++out.explored;
        family.clear();
        for (std::uint64_t rest = bits; rest; rest &= rest - 1)
            family.push_back(cand[static_cast<std::size_t>(std::countr_zero(rest))]);
        if (!nu_below(family, r, s)) continue;
        const std::uint64_t v = eval.value(family);
        if (!out.any || v > out.best) {
            out.best = v;
            out.any = true;
            out.attaining.clear();
            out.truncated = false;
            out.attaining.push_back(bits);
        } else if (v == out.best) {
            if (out.attaining.size() < cap)
                out.attaining.push_back(bits);
            else
                out.truncated = true;
        }
    }
}

// Immediate predecessors of e in the dominance order: replace some vertex v
// by v-1 when v-1 is free. A family is shifted iff it is closed under these.
std::vector<VertexSet> dominance_covers(VertexSet e) {
    std::vector<VertexSet> covers;
    for (VertexSet rest = e; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest) + 1;
        if (v >= 2 && !has_vertex(e, v - 1))
            covers.push_back((e ^ vertex_bit(v)) | vertex_bit(v - 1));
    }
    return covers;
}

}  // namespace

SearchReport brute_force_max(const SearchOptions& opt) {
    if (opt.n < 0 || opt.r < 1 || opt.r > opt.n)
        throw std::invalid_argument("brute_force_max: need 1 <= r <= n");
    if (opt.s < 1) throw std::invalid_argument("brute_force_max: need s >= 1");
    if (opt.objective != Objective::EdgeCount && opt.k < 1)
        throw std::invalid_argument("brute_force_max: counting objectives need k >= 1");

    const Hypergraph all = complete(opt.n, opt.r);
    const auto& cand = all.edges();
    const std::uint64_t m = cand.size();

    SearchReport rep;
    rep.objective = opt.objective;
    rep.n = opt.n;
    rep.r = opt.r;
    rep.s = opt.s;
    rep.k = opt.k;
    rep.restricted_to_shifted = opt.restrict_shifted;
    rep.seed = opt.seed;

    std::uint64_t best = 0;
    bool any = false;
    std::vector<std::vector<VertexSet>> raw;  // attaining families as edge lists
    bool truncated = false;

    if (!opt.restrict_shifted) {
        if (m > kUnrestrictedGuard)
            throw guard_error("unrestricted search guarded to C(n,r) <= " +
                              std::to_string(kUnrestrictedGuard) +
                              " candidate edges (got " + std::to_string(m) +
                              "); use the shifted-only mode");
        const std::uint64_t total = std::uint64_t{1} << m;
        const int jobs = std::max(1, opt.jobs);
        std::vector<ChunkResult> chunks(static_cast<std::size_t>(jobs));
        if (jobs == 1) {
            scan_range(cand, opt.n, opt.r, opt.s, opt.k, opt.objective, 0, total,
                       opt.witness_cap, chunks[0]);
        } else {
            std::vector<std::thread> pool;
            const std::uint64_t step = (total + jobs - 1) / jobs;
            for (int w = 0; w < jobs; ++w) {
                const std::uint64_t lo = std::min<std::uint64_t>(step * w, total);
                const std::uint64_t hi = std::min<std::uint64_t>(lo + step, total);
                pool.emplace_back([&, w, lo, hi] {
                    scan_range(cand, opt.n, opt.r, opt.s, opt.k, opt.objective, lo, hi,
                               opt.witness_cap, chunks[static_cast<std::size_t>(w)]);
                });
            }
            for (auto& th : pool) th.join();
        }
        // deterministic merge in ascending range order
        for (const auto& c : chunks) {
            rep.explored += c.explored;
            if (!c.any) continue;
            if (!any || c.best > best) {
                best = c.best;
                any = true;
                raw.clear();
                truncated = false;
            }
            if (c.best == best) {
                for (std::uint64_t bits : c.attaining) {
                    if (raw.size() >= opt.witness_cap) {
                        truncated = true;
                        break;
                    }
                    std::vector<VertexSet> fam;
                    for (std::uint64_t rest = bits; rest; rest &= rest - 1)
                        fam.push_back(cand[static_cast<std::size_t>(std::countr_zero(rest))]);
                    raw.push_back(std::move(fam));
                }
                truncated = truncated || c.truncated;
            }
        }
    } else {
        if (m > kShiftedGuard)
            throw guard_error("shifted-only search guarded to C(n,r) <= " +
                              std::to_string(kShiftedGuard) + " candidate edges");
        ObjectiveEval eval(opt.n, opt.r, opt.k, opt.objective);
        std::vector<char> present(cand.size(), 0);
        std::vector<VertexSet> family;
        // index of every candidate mask for cover lookups
        auto index_of = [&](VertexSet e) {
            return static_cast<std::size_t>(
                std::lower_bound(cand.begin(), cand.end(), e) - cand.begin());
        };
        std::function<void(std::size_t)> walk = [&](std::size_t idx) {
            if (idx == cand.size()) {
                ++rep.explored;
                const std::uint64_t v = eval.value(family);
                if (!any || v > best) {
                    best = v;
                    any = true;
                    raw.clear();
                    truncated = false;
                    raw.push_back(family);
                } else if (v == best) {
                    if (raw.size() < opt.witness_cap)
                        raw.push_back(family);
                    else
                        truncated = true;
                }
                return;
            }
            // leave idx out
            walk(idx + 1);
            // take idx if down-closure permits and the matching stays small
            for (VertexSet cover : dominance_covers(cand[idx]))
                if (!present[index_of(cover)]) return;
            family.push_back(cand[idx]);
            if (nu_below(family, opt.r, opt.s)) {
                present[idx] = 1;
                walk(idx + 1);
                present[idx] = 0;
            }
            family.pop_back();
        };
        walk(0);
    }

    rep.max_value = any ? best : 0;
    rep.witnesses_truncated = truncated;

    // deduplicate witnesses up to isomorphism (exact equality beyond the
    // canonical-labeling guard)
    std::vector<std::vector<VertexSet>> seen_keys;
    for (auto& fam : raw) {
        Hypergraph h(opt.n, opt.r, fam);
        std::vector<VertexSet> key =
            opt.n <= kCanonicalGuard ? canonical_form(h) : h.edges();
        if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end())
            continue;
        seen_keys.push_back(std::move(key));
        rep.witnesses.push_back(std::move(h));
    }
    return rep;
}

std::string to_report_text(const SearchReport& rep) {
    std::string out;
    out += "objective: " + std::string(objective_name(rep.objective)) + "\n";
    out += "n: " + std::to_string(rep.n) + "\n";
    out += "r: " + std::to_string(rep.r) + "\n";
    out += "s: " + std::to_string(rep.s) + "\n";
    out += "k: " + std::to_string(rep.k) + "\n";
    out += "restricted_to_shifted: " + std::string(rep.restricted_to_shifted ? "true" : "false") + "\n";
    out += "seed: " + std::to_string(rep.seed) + "\n";
    out += "explored: " + std::to_string(rep.explored) + "\n";
    out += "max_value: " + std::to_string(rep.max_value) + "\n";
    out += "witness_count: " + std::to_string(rep.witnesses.size()) + "\n";
    out += "witnesses_truncated: " + std::string(rep.witnesses_truncated ? "true" : "false") + "\n";
    for (std::size_t w = 0; w < rep.witnesses.size(); ++w) {
        out += "witness " + std::to_string(w + 1) + ":\n";
        out += serialize(rep.witnesses[w]);
    }
    return out;
}

std::string to_csv(const SearchReport& rep) {
    std::string out = "objective,n,r,s,k,max_value,witness_count,explored,seed\n";
    out += std::string(objective_name(rep.objective)) + "," + std::to_string(rep.n) + "," +
           std::to_string(rep.r) + "," + std::to_string(rep.s) + "," +
           std::to_string(rep.k) + "," + std::to_string(rep.max_value) + "," +
           std::to_string(rep.witnesses.size()) + "," + std::to_string(rep.explored) +
           "," + std::to_string(rep.seed) + "\n";
    return out;
}

NormExtremalResult norm_extremal_check(int n, int r, int s, int k) {
    NormExtremalResult out;
    const Hypergraph star = star_extremal(n, r, s);
    out.star_value = norm_direct(star, r - 1, k);
    SearchOptions opt;
    opt.n = n;
    opt.r = r;
    opt.s = s;
    opt.k = k;
    opt.objective = Objective::Norm;
    out.report = brute_force_max(opt);
    out.star_attains = out.report.max_value == out.star_value;
    bool star_among = false;
    for (const auto& w : out.report.witnesses)
        if (is_isomorphic(w, star)) star_among = true;
    out.tie = out.star_attains && out.report.witnesses.size() > 1;
    out.holds = out.star_attains && star_among && out.report.witnesses.size() == 1;
    return out;
}

// ---- counterexample search ---------------------------------------------

namespace {

struct TargetSpec {
    enum Kind { SunflowerDecrease, FreenessBroken } kind = SunflowerDecrease;
    int a = 0;       // kernel size for the decrease target
    int k = 0;       // petals for the decrease target
    char shape = 0;  // P, C, S, K for freeness targets
    int ell = 0;
};

TargetSpec parse_target(const std::string& target, int r) {
    static const std::regex sun_re(R"(^S_\{(\d+),(\d+)\}(\^(\d+))?-decrease$)");
    static const std::regex free_re(R"(^([PCSK])_(\d+)(\^(\d+))?-freeness$)");
    std::smatch m;
    TargetSpec spec;
    if (std::regex_match(target, m, sun_re)) {
        spec.kind = TargetSpec::SunflowerDecrease;
        spec.a = std::stoi(m[1]);
        spec.k = std::stoi(m[2]);
        if (m[4].matched && std::stoi(m[4]) != r)
            throw std::invalid_argument("target uniformity does not match the requested r");
        if (spec.a < 0 || spec.a > r - 1)
            throw std::invalid_argument("target kernel size must be in [0, r-1]");
        if (spec.k < 1) throw std::invalid_argument("target petal count must be >= 1");
        return spec;
    }
    if (std::regex_match(target, m, free_re)) {
        spec.kind = TargetSpec::FreenessBroken;
        spec.shape = m[1].str()[0];
        spec.ell = std::stoi(m[2]);
        if (m[4].matched && std::stoi(m[4]) != r)
            throw std::invalid_argument("target uniformity does not match the requested r");
        if (spec.shape == 'K' && spec.ell != 3)
            throw std::invalid_argument("only the K_3 expansion target is supported");
        if (spec.shape == 'C' && spec.ell < 3)
            throw std::invalid_argument("cycle targets need at least 3 edges");
        if (spec.ell < 1) throw std::invalid_argument("target size must be >= 1");
        return spec;
    }
    throw std::invalid_argument(
        "unknown target '" + target +
        "' (expected S_{a,k}-decrease or (P|C|S)_<l>-freeness or K_3-freeness)");
}

Hypergraph freeness_pattern(const TargetSpec& spec, int r) {
    switch (spec.shape) {
        case 'P': return path_pattern(spec.ell, r);
        case 'C': return cycle_pattern(spec.ell, r);
        case 'S': return star_pattern(spec.ell, r);
        case 'K': return clique_pattern(3, r);
    }
    throw std::logic_error("unreachable");
}

std::string describe(const TargetSpec& spec, int r) {
    if (spec.kind == TargetSpec::SunflowerDecrease)
        return "count of kernel-" + std::to_string(spec.a) + " sunflowers with " +
               std::to_string(spec.k) + " petals (uniformity " + std::to_string(r) +
               ") strictly decreased under a shift";
    return std::string(1, spec.shape) + "_" + std::to_string(spec.ell) +
           " expansion freeness broken by a shift";
}

}  // namespace

CounterexampleReport find_shift_counterexample(const CounterexampleQuery& q) {
    if (q.r < 2) throw std::invalid_argument("find_shift_counterexample: need r >= 2");
    if (q.n_max < q.r) throw std::invalid_argument("find_shift_counterexample: n_max < r");
    const TargetSpec spec = parse_target(q.target, q.r);

    CounterexampleReport rep;
    rep.target = q.target;
    rep.seed = q.seed;
    rep.property = describe(spec, q.r);

    const bool decrease = spec.kind == TargetSpec::SunflowerDecrease;
    Hypergraph pattern;
    if (!decrease) pattern = freeness_pattern(spec, q.r);

    std::mt19937_64 rng(q.seed);
    for (int n = q.r + 1; n <= q.n_max; ++n) {
        for (std::uint64_t trial = 0; trial < q.trials; ++trial) {
            const Hypergraph h = random_hypergraph(rng, n, q.r);
            if (h.edge_count() == 0) continue;
            std::uint64_t before_count = 0;
            if (decrease) {
                before_count = count_sunflowers(h, spec.a, spec.k);
                if (before_count == 0) continue;
            } else {
                if (pattern.vertex_count() > n) continue;
                if (contains_subhypergraph(h, pattern)) continue;  // not free
            }
            for (int i = 1; i < n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    auto [shifted, moved] = shift_with_count(h, ShiftPair{i, j});
                    if (moved == 0) continue;
                    ++rep.explored;
                    if (decrease) {
                        const std::uint64_t after_count =
                            count_sunflowers(shifted, spec.a, spec.k);
                        if (after_count < before_count) {
                            rep.found = true;
                            rep.before = h;
                            rep.after = shifted;
                            rep.pair = ShiftPair{i, j};
                            rep.value_before = std::to_string(before_count);
                            rep.value_after = std::to_string(after_count);
                            if (!reverify(rep))
                                throw std::logic_error("counterexample failed re-verification");
                            return rep;
                        }
                    } else {
                        if (contains_subhypergraph(shifted, pattern)) {
                            rep.found = true;
                            rep.before = h;
                            rep.after = shifted;
                            rep.pair = ShiftPair{i, j};
                            rep.value_before = "free";
                            rep.value_after = "contains";
                            if (!reverify(rep))
                                throw std::logic_error("counterexample failed re-verification");
                            return rep;
                        }
                    }
                }
            }
        }
    }
    return rep;  // found = false: a valid outcome within the bounds
}

bool reverify(const CounterexampleReport& rep) {
    if (!rep.found) return false;
    const TargetSpec spec = parse_target(rep.target, rep.before.uniformity());
    const Hypergraph shifted = shift(rep.before, rep.pair);
    if (!(shifted == rep.after)) return false;
    if (spec.kind == TargetSpec::SunflowerDecrease) {
        const std::uint64_t b = count_sunflowers(rep.before, spec.a, spec.k);
        const std::uint64_t a = count_sunflowers(shifted, spec.a, spec.k);
        return a < b && std::to_string(b) == rep.value_before &&
               std::to_string(a) == rep.value_after;
    }
    const Hypergraph pattern = freeness_pattern(spec, rep.before.uniformity());
    return !contains_subhypergraph(rep.before, pattern) &&
           contains_subhypergraph(shifted, pattern);
}

std::string to_report_text(const CounterexampleReport& rep) {
    std::string out;
    out += "target: " + rep.target + "\n";
    out += "property: " + rep.property + "\n";
    out += "found: " + std::string(rep.found ? "true" : "false") + "\n";
    out += "seed: " + std::to_string(rep.seed) + "\n";
    out += "explored: " + std::to_string(rep.explored) + "\n";
    if (!rep.found) return out;
    out += "pair: " + std::to_string(rep.pair.i) + " " + std::to_string(rep.pair.j) + "\n";
    out += "before: " + rep.value_before + "\n";
    out += "after: " + rep.value_after + "\n";
    out += "hypergraph:\n" + serialize(rep.before);
    out += "shifted:\n" + serialize(rep.after);
    return out;
}

}  // namespace hypershift
