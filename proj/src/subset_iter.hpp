#pragma once

#include "hypershift/hypergraph.hpp"

namespace hypershift::detail {

// Visit all size-c subsets of the lowest n bit positions in ascending mask
// order (Gosper's hack). c = 0 yields the empty set once.
template <typename Fn>
void for_each_subset(int n, int c, Fn&& fn) {
    if (c < 0 || c > n) return;
    if (c == 0) {
        fn(VertexSet{0});
        return;
    }
    VertexSet v = prefix_set(c);
    const VertexSet top = prefix_set(n) & ~prefix_set(n - c);
    while (true) {
        fn(v);
        if (v == top) break;
        const VertexSet low = v & (~v + 1);
        const VertexSet carry = v + low;
        v = (((carry ^ v) >> 2) / low) | carry;
    }
}

}  // namespace hypershift::detail
