#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lndexp/polynomial.hpp"

namespace lndexp {

/// A polynomial self-map of affine n-space: one component polynomial per
/// variable, all over the same ring.
class PolyMap {
 public:
  PolyMap(RingPtr ring, std::vector<Polynomial> components);

  static PolyMap identity(RingPtr ring);
  static PolyMap zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return components_.size(); }
  const Polynomial& component(std::size_t i) const { return components_.at(i); }
  std::span<const Polynomial> components() const { return components_; }

  bool is_identity() const;
  bool is_zero() const;

  /// Componentwise linear structure, used to evaluate univariate
  /// polynomials at maps.
  friend PolyMap operator+(const PolyMap& f, const PolyMap& g);
  friend PolyMap operator*(const Rational& c, const PolyMap& f);

  bool operator==(const PolyMap& other) const;
  bool operator!=(const PolyMap& other) const { return !(*this == other); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> components_;
};

/// Map composition "f after g": component i is f_i with g substituted.
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// m-fold self-composition; m = 0 is the identity.
PolyMap iterate_map(const PolyMap& f, std::uint64_t m);

/// The endomorphism view: substitute the map's components for the
/// variables of p.
Polynomial substitute(const Polynomial& p, const PolyMap& images);

}  // namespace lndexp
