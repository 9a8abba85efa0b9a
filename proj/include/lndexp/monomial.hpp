#pragma once

#include <cstdint>
#include <vector>

#include "lndexp/errors.hpp"

namespace lndexp {

/// A power product, stored as one exponent per ring variable. Exponents
/// are machine words with overflow checks; coefficients elsewhere are
/// arbitrary precision, since exponentials inflate coefficients far
/// faster than exponents.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_)
      if (e < 0) throw InvalidArgument("negative exponent in monomial");
  }

  std::size_t nvars() const { return exps_.size(); }
  std::int64_t exponent(std::size_t i) const { return exps_.at(i); }
  const std::vector<std::int64_t>& exponents() const { return exps_; }

  std::int64_t total_degree() const {
    std::int64_t d = 0;
    for (auto e : exps_) {
      if (__builtin_add_overflow(d, e, &d)) throw OverflowError("monomial degree overflow");
    }
    return d;
  }

  /// Product of power products: componentwise exponent sum.
  Monomial times(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
      throw RingMismatch("monomials of different variable counts");
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (__builtin_add_overflow(exps_[i], other.exps_[i], &r.exps_[i]))
        throw OverflowError("exponent overflow in monomial product");
    }
    return r;
  }

  Monomial pow(std::uint64_t k) const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (__builtin_mul_overflow(exps_[i], static_cast<std::int64_t>(k), &r.exps_[i]))
        throw OverflowError("exponent overflow in monomial power");
    }
    return r;
  }

  bool is_unit() const {
    for (auto e : exps_)
      if (e != 0) return false;
    return true;
  }

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  std::vector<std::int64_t> exps_;
};

/// Graded lexicographic comparison: total degree first, lexicographic on
/// the exponent vector (earlier variables weigh more) as tie-break.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  std::int64_t da = a.total_degree();
  std::int64_t db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    std::int64_t ea = a.exponent(i);
    std::int64_t eb = b.exponent(i);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

/// Canonical storage/printing order: graded lexicographic, descending.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) > 0;
  }
};

}  // namespace lndexp
