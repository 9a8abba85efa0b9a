#include "lndexp/derivation.hpp"

#include <string>

namespace lndexp {

Derivation::Derivation(RingPtr ring, std::vector<Polynomial> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (!ring_) throw InvalidArgument("derivation needs a ring");
  if (images_.size() != ring_->size())
    throw ArityMismatch("derivation needs one image per variable");
  for (const auto& f : images_) require_same_ring(ring_, f.ring());
}

Derivation Derivation::zero(RingPtr ring) {
  std::vector<Polynomial> images(ring->size(), Polynomial::zero(ring));
  return Derivation(std::move(ring), std::move(images));
}

Polynomial Derivation::apply(const Polynomial& p) const {
  require_same_ring(ring_, p.ring());
  Polynomial acc = Polynomial::zero(ring_);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].is_zero()) continue;
    Polynomial dp = partial_derivative(p, i);
    if (dp.is_zero()) continue;
    acc = acc + images_[i] * dp;
  }
  return acc;
}

Polynomial Derivation::iterate_apply(const Polynomial& p, std::uint64_t m) const {
  Polynomial q = p;
  for (std::uint64_t i = 0; i < m && !q.is_zero(); ++i) q = apply(q);
  return q;
}

Derivation Derivation::operator-() const {
  std::vector<Polynomial> images;
  images.reserve(images_.size());
  for (const auto& f : images_) images.push_back(-f);
  return Derivation(ring_, std::move(images));
}

Derivation Derivation::scaled(const Rational& c) const {
  std::vector<Polynomial> images;
  images.reserve(images_.size());
  for (const auto& f : images_) images.push_back(c * f);
  return Derivation(ring_, std::move(images));
}

Derivation operator+(const Derivation& d, const Derivation& e) {
  require_same_ring(d.ring_, e.ring_);
  std::vector<Polynomial> images;
  images.reserve(d.images_.size());
  for (std::size_t i = 0; i < d.images_.size(); ++i)
    images.push_back(d.images_[i] + e.images_[i]);
  return Derivation(d.ring_, std::move(images));
}

std::optional<std::uint64_t> nilpotency_index(const Derivation& d, const Polynomial& p,
                                              std::uint64_t cap) {
  require_same_ring(d.ring(), p.ring());
  Polynomial q = p;
  for (std::uint64_t m = 0; m <= cap; ++m) {
    if (q.is_zero()) return m;
    if (m == cap) break;
    q = d.apply(q);
  }
  return std::nullopt;
}

NilpotencyReport nilpotency_degree(const Derivation& d, std::uint64_t cap) {
  NilpotencyReport report;
  report.cap_used = cap;
  bool all_detected = true;
  std::uint64_t max_index = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto idx = nilpotency_index(d, Polynomial::variable(d.ring(), i), cap);
    report.per_variable.push_back(idx);
    if (idx)
      max_index = std::max(max_index, *idx);
    else
      all_detected = false;
  }
  if (all_detected) report.degree = max_index;
  return report;
}

Polynomial exp_apply(const Derivation& d, const Polynomial& p, std::uint64_t cap) {
  require_same_ring(d.ring(), p.ring());
  Polynomial sum = p;
  Polynomial term = p;  // D^i(p)/i!
  for (std::uint64_t i = 1; !term.is_zero(); ++i) {
    if (i > cap)
      throw CapExceeded("exp series did not terminate within cap " + std::to_string(cap), cap);
    term = make_rational(BigInt(1), BigInt(static_cast<unsigned long>(i))) * d.apply(term);
    sum = sum + term;
  }
  return sum;
}

PolyMap exp_map(const Derivation& d, std::uint64_t cap) {
  std::vector<Polynomial> comps;
  comps.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    comps.push_back(exp_apply(d, Polynomial::variable(d.ring(), i), cap));
  return PolyMap(d.ring(), std::move(comps));
}

}  // namespace lndexp
