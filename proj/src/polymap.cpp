#include "lndexp/polymap.hpp"

namespace lndexp {

PolyMap::PolyMap(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (!ring_) throw InvalidArgument("map needs a ring");
  if (components_.size() != ring_->size())
    throw ArityMismatch("map needs one component per variable");
  for (const auto& c : components_) require_same_ring(ring_, c.ring());
}

PolyMap PolyMap::identity(RingPtr ring) {
  std::vector<Polynomial> comps;
  comps.reserve(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) comps.push_back(Polynomial::variable(ring, i));
  return PolyMap(std::move(ring), std::move(comps));
}

PolyMap PolyMap::zero(RingPtr ring) {
  std::vector<Polynomial> comps(ring->size(), Polynomial::zero(ring));
  return PolyMap(std::move(ring), std::move(comps));
}

bool PolyMap::is_identity() const { return *this == identity(ring_); }

bool PolyMap::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

PolyMap operator+(const PolyMap& f, const PolyMap& g) {
  require_same_ring(f.ring_, g.ring_);
  std::vector<Polynomial> comps;
  comps.reserve(f.components_.size());
  for (std::size_t i = 0; i < f.components_.size(); ++i)
    comps.push_back(f.components_[i] + g.components_[i]);
  return PolyMap(f.ring_, std::move(comps));
}

PolyMap operator*(const Rational& c, const PolyMap& f) {
  std::vector<Polynomial> comps;
  comps.reserve(f.components_.size());
  for (const auto& comp : f.components_) comps.push_back(c * comp);
  return PolyMap(f.ring_, std::move(comps));
}

bool PolyMap::operator==(const PolyMap& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  return components_ == other.components_;
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  require_same_ring(f.ring(), g.ring());
  std::vector<Polynomial> comps;
  comps.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) comps.push_back(substitute(f.component(i), g));
  return PolyMap(f.ring(), std::move(comps));
}

PolyMap iterate_map(const PolyMap& f, std::uint64_t m) {
  PolyMap acc = PolyMap::identity(f.ring());
  for (std::uint64_t i = 0; i < m; ++i) acc = compose(acc, f);
  return acc;
}

Polynomial substitute(const Polynomial& p, const PolyMap& images) {
  require_same_ring(p.ring(), images.ring());
  return substitute(p, images.components());
}

}  // namespace lndexp
