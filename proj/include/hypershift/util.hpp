#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypershift {

// A desk-scale size guard was exceeded (n > 64, canonical labeling beyond
// n = 10, search space too large, ...). CLI maps this to exit code 3.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input in the text hypergraph format. CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact unsigned arithmetic that refuses to wrap. All counting in this
// library is exact integer arithmetic; anything that would overflow 64 bits
// throws std::overflow_error instead of returning garbage.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, int exp);

// C(n, k). Zero when k < 0 or n < k; C(n, 0) = 1 (also for n < 0, matching
// the "choose nothing" reading used by the counting recursion's k-2 term).
std::uint64_t binomial(std::int64_t n, std::int64_t k);

std::uint64_t factorial(int n);

}  // namespace hypershift
