#pragma once

#include <cstdint>
#include <random>

#include "lndexp/polynomial.hpp"

namespace lndexp {

// Seeded generators for randomized self-checks. Draws come straight from
// the engine (no distribution objects), so a given seed produces the
// same values on every platform.

std::int64_t random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

Rational random_rational(std::mt19937_64& rng, std::int64_t bound);

/// Random polynomial with up to max_terms terms, each of total degree at
/// most max_degree, coefficients p/q with |p| <= bound, 1 <= q <= bound.
/// May come out zero when terms cancel; callers that need nonzero retry.
Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, int max_degree,
                             int max_terms, std::int64_t coeff_bound);

}  // namespace lndexp
