#pragma once

#include <cstdint>

#include "lndexp/rational.hpp"

namespace lndexp {

// Exact integer combinatorics. The 0^0 = 1 convention holds throughout;
// it is what makes the alternating binomial sum for i = 0 collapse to
// the (1-1)^d expansion.

/// C(n, k); zero for k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// m^i with 0^0 = 1.
BigInt int_pow(std::uint64_t m, std::uint64_t i);

/// Alternating moment sum over binomial coefficients,
///   sum_{m=0}^{d} (-1)^m C(d,m) m^i,
/// computed by direct summation (the recursion the value satisfies is a
/// test oracle, kept independent). Zero exactly when i < d; requires d >= 1.
BigInt beta(std::uint64_t d, std::uint64_t i);

/// Power sum over an initial segment: sum_{j=0}^{m-1} j^k, zero when m = 0.
BigInt power_sum(std::uint64_t k, std::uint64_t m);

}  // namespace lndexp
