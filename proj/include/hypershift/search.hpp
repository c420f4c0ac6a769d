#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypershift/hypergraph.hpp"
#include "hypershift/shifting.hpp"

namespace hypershift {

// ---- closed forms ------------------------------------------------------

// N(S_{r-1,k}^r, H*) for the star family H* on [n] with window [s-1]:
//   [C(n,r-1) - C(n-s+1,r-1)] * C(n-r+1,k) + C(n-s+1,r-1) * C(s-1,k)
// for k >= 2; for k = 1 a copy is a single edge, so the value is e(H*).
std::uint64_t star_count_formula(int n, int r, int s, int k);

// N(S_{r-1,k}^r, H') for the cover-2 family with window W = [(s-1)r+1]:
// (r-1)-sets meeting W in j >= 2 vertices have degree n-r+1; those meeting W
// in exactly one vertex have degree |W|-1 = (s-1)r. Requires r >= 3.
std::uint64_t cover2_count_formula(int n, int r, int s, int k);

// Maximum edge count of an M_s-free r-graph attained by the star family:
// C(n,r) - C(n-s+1,r).
std::uint64_t star_edge_bound(int n, int r, int s);

// max( C(sr-1, r), star_edge_bound(n, r, s) ).
std::uint64_t emc_bound(int n, int r, int s);

// ---- exhaustive maximization -------------------------------------------

enum class Objective { SunflowerCount, Norm, EdgeCount };

const char* objective_name(Objective o);
std::optional<Objective> parse_objective(const std::string& name);

struct SearchOptions {
    int n = 0;
    int r = 0;
    int s = 0;                 // forbid matchings of size s (keep nu < s)
    int k = 0;                 // petals / power for the two counting objectives
    Objective objective = Objective::SunflowerCount;
    bool restrict_shifted = false;
    int jobs = 1;
    std::uint64_t seed = 0;    // echoed in the report
    std::size_t witness_cap = 4096;
};

struct SearchReport {
    Objective objective = Objective::SunflowerCount;
    int n = 0, r = 0, s = 0, k = 0;
    std::uint64_t max_value = 0;
    std::vector<Hypergraph> witnesses;  // deduplicated up to isomorphism
    std::uint64_t explored = 0;         // candidate families examined
    bool restricted_to_shifted = false;
    std::uint64_t seed = 0;
    bool witnesses_truncated = false;
};

// Exact maximum of the objective over all r-graphs on [n] with nu < s.
// Unrestricted mode walks all 2^C(n,r) families (guard C(n,r) <= 25);
// restrict_shifted walks only shifted families — down-closed edge sets in
// the dominance order — which is sound for all three objectives because
// shifting preserves nu < s and never lowers any of them.
SearchReport brute_force_max(const SearchOptions& opt);

std::string to_report_text(const SearchReport& rep);
std::string to_csv(const SearchReport& rep);

// ---- norm extremality check --------------------------------------------

struct NormExtremalResult {
    bool holds = false;            // max attained by the star family, uniquely
    bool star_attains = false;     // star value equals the exhaustive max
    bool tie = false;              // other witnesses reach the same value
    std::uint64_t star_value = 0;
    SearchReport report;
};

// Does the exhaustive (r-1,k)-norm maximum over M_s-free r-graphs on [n]
// equal the star family's norm, with the star as unique witness? Ties are
// recorded, not errors: small n legitimately produces them.
NormExtremalResult norm_extremal_check(int n, int r, int s, int k);

// ---- counterexample search ---------------------------------------------

struct CounterexampleQuery {
    std::string target;       // see parse notes in search.cpp / CLI --help
    int r = 3;
    int n_max = 7;
    std::uint64_t seed = 1;
    std::uint64_t trials = 400;  // random families per vertex count
};

struct CounterexampleReport {
    bool found = false;
    std::string target;
    std::string property;     // human-readable statement of what changed
    Hypergraph before;
    Hypergraph after;
    ShiftPair pair;
    std::string value_before;
    std::string value_after;
    std::uint64_t explored = 0;  // (family, pair) evaluations
    std::uint64_t seed = 0;
};

// Seeded randomized + systematic search for a family and a shift pair
// witnessing the target phenomenon. Supported targets:
//   "S_{a,k}-decrease"  count of kernel-a, k-petal sunflowers strictly drops
//   "P_<l>-freeness"    path-expansion freeness broken by a shift
//   "C_<l>-freeness"    cycle-expansion freeness broken
//   "S_<l>-freeness"    star-expansion freeness broken
//   "K_3-freeness"      triangle-expansion freeness broken
// A trailing "^r" in the sunflower target is accepted and must match r.
// Every hit is re-verified from scratch before being returned; not-found
// within the bounds is a valid outcome (found = false).
CounterexampleReport find_shift_counterexample(const CounterexampleQuery& q);

// Recompute both sides of a found report from its stored inputs.
bool reverify(const CounterexampleReport& rep);

std::string to_report_text(const CounterexampleReport& rep);

}  // namespace hypershift
