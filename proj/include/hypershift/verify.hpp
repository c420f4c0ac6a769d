#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypershift/hypergraph.hpp"

namespace hypershift {

// Seeded random r-graph with a density drawn per instance. Uses raw
// mt19937_64 words only, so the stream is identical on every platform.
Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r);

// rng helpers with fully deterministic (modulo) semantics
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound);  // [0, bound)
int rand_in(std::mt19937_64& rng, int lo, int hi);                    // [lo, hi]

struct SuiteResult {
    std::string name;
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::vector<std::string> failures;  // first few, for diagnostics

    bool ok() const { return fail == 0; }
};

// Named property suites exposed by the CLI `verify` command:
//   lemma21       matching number never increases under a shift
//   lemma24       kernel-(r-1) sunflower counts never decrease under a shift
//   phi-injective transported copies are valid and pairwise distinct
//   identity11    degree-power norm equals the Stirling-weighted count form
//   lemma31       deletion-link recursion: exact at k=1, upper bound at k>=2,
//                 breakdown parts partition the total, overcount factor exact
//   formulas      closed forms match brute enumeration on the star and
//                 cover-2 families over the full desk grid (trials ignored)
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::uint64_t trials);

}  // namespace hypershift
