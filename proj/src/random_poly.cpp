#include "lndexp/random_poly.hpp"

namespace lndexp {

std::int64_t random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational random_rational(std::mt19937_64& rng, std::int64_t bound) {
  std::int64_t num = random_int(rng, -bound, bound);
  std::int64_t den = random_int(rng, 1, bound);
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, int max_degree,
                             int max_terms, std::int64_t coeff_bound) {
  Polynomial::TermMap terms;
  int nterms = static_cast<int>(random_int(rng, 0, max_terms));
  for (int t = 0; t < nterms; ++t) {
    std::vector<std::int64_t> exps(ring->size(), 0);
    std::int64_t budget = random_int(rng, 0, max_degree);
    for (std::int64_t used = 0; used < budget; ++used) {
      std::size_t v = static_cast<std::size_t>(random_int(
          rng, 0, static_cast<std::int64_t>(ring->size()) - 1));
      ++exps[v];
    }
    Rational coeff = random_rational(rng, coeff_bound);
    terms.try_emplace(Monomial(std::move(exps))).first->second += coeff;
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace lndexp
