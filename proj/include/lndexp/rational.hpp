#pragma once

#include <gmpxx.h>

#include <string>

#include "lndexp/errors.hpp"

namespace lndexp {

// Exact arbitrary-precision arithmetic. GMP's canonical form is the
// invariant we rely on everywhere: gcd(|num|, den) = 1, den > 0, zero
// stored as 0/1.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws InvalidArgument on den == 0.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline bool is_canonical(const Rational& q) {
  if (q.get_den() <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return g == 1 || (q.get_num() == 0 && q.get_den() == 1);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace lndexp
