#include "hypershift/norms.hpp"

#include <algorithm>

#include "hypershift/sunflower.hpp"
#include "subset_iter.hpp"

namespace hypershift {

namespace {

constexpr int kStirlingGuard = 20;

__int128 ipow128(int base, int exp) {
    __int128 out = 1;
    for (int q = 0; q < exp; ++q) out *= base;
    return out;
}

}  // namespace

std::uint64_t stirling2(int k, int m) {
    if (k < 0 || m < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > kStirlingGuard)
        throw guard_error("stirling2 guarded to k <= " + std::to_string(kStirlingGuard));
    if (m > k) return 0;
    if (m == 0) return k == 0 ? 1 : 0;
    __int128 sum = 0;
    for (int i = 0; i <= m; ++i) {
        const __int128 term =
            static_cast<__int128>(binomial(m, i)) * ipow128(i, k);
        sum += ((m - i) % 2 == 0) ? term : -term;
    }
    sum /= static_cast<__int128>(factorial(m));  // exact
    if (sum < 0 || sum > static_cast<__int128>(~std::uint64_t{0}))
        throw std::overflow_error("stirling2 overflow");
    return static_cast<std::uint64_t>(sum);
}

bool newton_expand_check(std::uint64_t d, int k) {
    if (k < 1) throw std::invalid_argument("newton_expand_check: need k >= 1");
    const std::uint64_t lhs = checked_pow(d, k);
    std::uint64_t rhs = 0;
    for (int m = 1; m <= k; ++m) {
        const std::uint64_t term = checked_mul(
            checked_mul(factorial(m), stirling2(k, m)),
            binomial(static_cast<std::int64_t>(d), m));
        rhs = checked_add(rhs, term);
    }
    return lhs == rhs;
}

std::uint64_t norm_direct(const Hypergraph& h, int t, int k) {
    if (k < 1) throw std::invalid_argument("norm_direct: need k >= 1");
    if (t < 1 || t >= std::max(h.uniformity(), 1))
        throw std::invalid_argument("norm_direct: need 1 <= t <= r-1");
    std::uint64_t total = 0;
    detail::for_each_subset(h.vertex_count(), t, [&](VertexSet kernel) {
        total = checked_add(total, checked_pow(degree(h, kernel), k));
    });
    return total;
}

std::uint64_t norm_via_identity(const Hypergraph& h, int k) {
    if (k < 2) throw std::invalid_argument("norm_via_identity: need k >= 2");
    const int r = h.uniformity();
    if (r < 2) throw std::invalid_argument("norm_via_identity: need r >= 2");
    std::uint64_t total =
        checked_mul(static_cast<std::uint64_t>(r), h.edge_count());  // m = 1 term
    for (int m = 2; m <= k; ++m) {
        const std::uint64_t weight = checked_mul(factorial(m), stirling2(k, m));
        const std::uint64_t copies = count_sunflowers(h, r - 1, m);
        total = checked_add(total, checked_mul(weight, copies));
    }
    return total;
}

}  // namespace hypershift
