#include "lndexp/polynomial.hpp"

#include <utility>

#include "lndexp/kernels.hpp"

namespace lndexp {

namespace {

void prune_zeros(Polynomial::TermMap& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, TermMap terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw InvalidArgument("polynomial needs a ring");
  for (const auto& [mono, coeff] : terms_) {
    if (mono.nvars() != ring_->size())
      throw RingMismatch("monomial length does not match ring");
  }
  prune_zeros(terms_);
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
  TermMap t;
  if (value != 0) t.emplace(Monomial(ring->size()), value);
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw IndexOutOfRange("variable index out of range");
  std::vector<std::int64_t> exps(ring->size(), 0);
  exps[index] = 1;
  TermMap t;
  t.emplace(Monomial(std::move(exps)), Rational(1));
  return Polynomial(std::move(ring), std::move(t));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
  TermMap t = terms_;
  for (auto& [mono, coeff] : t) coeff = -coeff;
  return Polynomial(ring_, std::move(t));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_);
  Polynomial::TermMap t = p.terms_;
  for (const auto& [mono, coeff] : q.terms_) {
    auto [it, inserted] = t.emplace(mono, coeff);
    if (!inserted) it->second += coeff;
  }
  prune_zeros(t);
  return Polynomial(p.ring_, std::move(t));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_);
  Polynomial::TermMap t = p.terms_;
  for (const auto& [mono, coeff] : q.terms_) {
    auto [it, inserted] = t.emplace(mono, -coeff);
    if (!inserted) it->second -= coeff;
  }
  prune_zeros(t);
  return Polynomial(p.ring_, std::move(t));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_);
  return Polynomial(p.ring_, kernels::mul_auto(p.terms_, q.terms_));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return Polynomial::zero(p.ring_);
  Polynomial::TermMap t = p.terms_;
  for (auto& [mono, coeff] : t) coeff *= c;
  return Polynomial(p.ring_, std::move(t));
}

Polynomial pow(const Polynomial& p, std::uint64_t k) {
  // Binary exponentiation; single-term bases take the cheap monomial path.
  if (k == 0) return Polynomial::constant(p.ring(), Rational(1));
  if (p.terms().size() == 1) {
    const auto& [mono, coeff] = *p.terms().begin();
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), coeff.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), coeff.get_den().get_mpz_t(), k);
    Polynomial::TermMap t;
    t.emplace(mono.pow(k), make_rational(num, den));
    return Polynomial(p.ring(), std::move(t));
  }
  Polynomial result = Polynomial::constant(p.ring(), Rational(1));
  Polynomial base = p;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.nvars()) throw IndexOutOfRange("variable index out of range");
  Polynomial::TermMap t;
  for (const auto& [mono, coeff] : p.terms()) {
    std::int64_t e = mono.exponent(var_index);
    if (e == 0) continue;
    std::vector<std::int64_t> exps = mono.exponents();
    exps[var_index] = e - 1;
    t.emplace(Monomial(std::move(exps)), coeff * Rational(static_cast<long>(e)));
  }
  return Polynomial(p.ring(), std::move(t));
}

Degree total_degree(const Polynomial& p) {
  Degree d;
  for (const auto& [mono, coeff] : p.terms()) {
    std::int64_t td = mono.total_degree();
    if (!d || td > *d) d = td;
  }
  return d;
}

Degree degree_in(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.nvars()) throw IndexOutOfRange("variable index out of range");
  Degree d;
  for (const auto& [mono, coeff] : p.terms()) {
    std::int64_t e = mono.exponent(var_index);
    if (!d || e > *d) d = e;
  }
  return d;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.nvars())
    throw ArityMismatch("substitution needs one image per variable");
  for (const auto& img : images) require_same_ring(p.ring(), img.ring());
  return kernels::substitute_auto(p, images);
}

}  // namespace lndexp
