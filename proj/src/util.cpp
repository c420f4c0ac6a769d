#include "hypershift/util.hpp"

namespace hypershift {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in addition");
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in multiplication");
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < k) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    constexpr unsigned __int128 kMax64 = ~std::uint64_t{0};
    const unsigned __int128 kMax128 = ~static_cast<unsigned __int128>(0);
    for (std::int64_t i = 1; i <= k; ++i) {
        const auto mult = static_cast<unsigned __int128>(n - k + i);
        if (acc > kMax128 / mult) throw std::overflow_error("binomial overflow");
        acc = acc * mult / static_cast<unsigned __int128>(i);  // exact: prefix products divisible
    }
    if (acc > kMax64) throw std::overflow_error("binomial overflow");
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    std::uint64_t out = 1;
    for (int i = 2; i <= n; ++i) out = checked_mul(out, static_cast<std::uint64_t>(i));
    return out;
}

}  // namespace hypershift
