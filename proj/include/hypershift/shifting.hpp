#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hypershift/hypergraph.hpp"
#include "hypershift/sunflower.hpp"

namespace hypershift {

// An ordered pair i < j parameterizing the shift that replaces j by i.
struct ShiftPair {
    int i = 0;
    int j = 0;
};

struct ShiftStep {
    ShiftPair pair;
    std::size_t moved = 0;  // edges that actually changed
};

struct ShiftTrace {
    std::vector<ShiftStep> steps;
};

// Image of a single edge e of H under the (i,j)-shift: (e \ {j}) ∪ {i} when
// j ∈ e, i ∉ e and the replacement is not already an edge; otherwise e.
VertexSet shift_edge(const Hypergraph& h, ShiftPair p, VertexSet e);

// The shifted family S_ij(H). Edge count is always preserved.
Hypergraph shift(const Hypergraph& h, ShiftPair p);
std::pair<Hypergraph, std::size_t> shift_with_count(const Hypergraph& h, ShiftPair p);

// Fixed by every S_ij with i < j.
bool is_shifted(const Hypergraph& h);

// Apply shifts in lexicographic (i, j) order, restarting the sweep after any
// move, until a full sweep moves nothing. Terminates because the vertex-label
// potential strictly drops on every recorded step.
std::pair<Hypergraph, ShiftTrace> shift_to_stable(const Hypergraph& h);

// Transport a kernel-(r-1) sunflower copy of H across the (i,j)-shift. This
// is the copy-count injection: identity whenever F survives in S_ij(H), and
// otherwise the explicit rebuilt copy determined by where i and j sit
// relative to the core and petal vertices. The result is validated to be a
// copy in S_ij(H); a failure throws std::logic_error.
Sunflower transport_sunflower(const Hypergraph& h, ShiftPair p, const Sunflower& f);

// Enumerate every S_{r-1,k}^r copy of H, transport each across the shift,
// and check all images are valid copies of S_ij(H) and pairwise distinct.
bool verify_transport_injective(const Hypergraph& h, ShiftPair p, int k);

}  // namespace hypershift
