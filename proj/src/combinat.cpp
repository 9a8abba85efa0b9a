#include "lndexp/combinat.hpp"

#include "lndexp/errors.hpp"

namespace lndexp {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt int_pow(std::uint64_t m, std::uint64_t i) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), m, i);  // GMP defines 0^0 = 1
  return r;
}

BigInt beta(std::uint64_t d, std::uint64_t i) {
  if (d == 0) throw InvalidArgument("beta requires d >= 1");
  BigInt sum(0);
  for (std::uint64_t m = 0; m <= d; ++m) {
    BigInt term = binomial(d, m) * int_pow(m, i);
    if (m % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

BigInt power_sum(std::uint64_t k, std::uint64_t m) {
  BigInt sum(0);
  for (std::uint64_t j = 0; j < m; ++j) sum += int_pow(j, k);
  return sum;
}

}  // namespace lndexp
