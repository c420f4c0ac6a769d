#pragma once

#include <cstdint>

#include "hypershift/hypergraph.hpp"

namespace hypershift {

// Stirling number of the second kind S(k, m): partitions of a k-set into m
// nonempty blocks, via the alternating-sum formula
//   S(k,m) = (1/m!) * sum_{i=0}^{m} (-1)^(m-i) C(m,i) i^k.
// S(0,0) = 1, S(k,0) = 0 for k >= 1. Exact; guarded to k <= 20.
std::uint64_t stirling2(int k, int m);

// d^k == sum_{m=1}^{k} m! S(k,m) C(d,m), checked in exact integers.
bool newton_expand_check(std::uint64_t d, int k);

// (t,k)-norm: sum of d_H(T)^k over all t-subsets T of [n]. Exact; integer k.
std::uint64_t norm_direct(const Hypergraph& h, int t, int k);

// The (r-1,k)-norm computed through sunflower counts instead of degree
// powers:  r*e(H) + sum_{i=2}^{k-1} i! S(k,i) N(S_{r-1,i}^r, H)
//                 + k! N(S_{r-1,k}^r, H),  for k >= 2.
// Always equals norm_direct(h, r-1, k).
std::uint64_t norm_via_identity(const Hypergraph& h, int k);

}  // namespace hypershift
