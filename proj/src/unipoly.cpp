#include "lndexp/unipoly.hpp"

#include <algorithm>

namespace lndexp {

namespace {

void normalize(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs_low_to_high)
    : coeffs_(std::move(coeffs_low_to_high)) {
  normalize(coeffs_);
}

UniPoly UniPoly::term(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
  std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) v[i] += q.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
  std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) v[i] -= q.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return UniPoly::zero();
  std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly pow(const UniPoly& p, std::uint64_t k) {
  UniPoly result = UniPoly::constant(Rational(1));
  UniPoly base = p;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace lndexp
