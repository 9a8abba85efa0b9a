#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lndexp/rational.hpp"

namespace lndexp {

/// Dense univariate polynomial over the rationals, coefficients indexed
/// by power of T. Canonical form: the highest stored coefficient is
/// nonzero; the zero polynomial stores nothing.
class UniPoly {
 public:
  UniPoly() = default;  // zero
  explicit UniPoly(std::vector<Rational> coeffs_low_to_high);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// c * T^k
  static UniPoly term(const Rational& c, std::size_t k);
  /// T - c
  static UniPoly t_minus(const Rational& c) { return UniPoly({-c, Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::int64_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  Rational coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q);

  bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const UniPoly& other) const { return !(*this == other); }

 private:
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, std::uint64_t k);

}  // namespace lndexp
