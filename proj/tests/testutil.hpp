#pragma once

#include <random>
#include <string>
#include <vector>

#include "lndexp/derivation.hpp"
#include "lndexp/polymap.hpp"
#include "lndexp/polynomial.hpp"
#include "lndexp/random_poly.hpp"
#include "lndexp/textio.hpp"

namespace testutil {

using namespace lndexp;

inline RingPtr ring_xyz() {
  static RingPtr ring = make_ring({"X", "Y", "Z"});
  return ring;
}

inline RingPtr ring_xy() {
  static RingPtr ring = make_ring({"X", "Y"});
  return ring;
}

inline Polynomial parse(const std::string& text, const RingPtr& ring) {
  return parse_poly(text, ring);
}

/// sigma = X*Z + Y^2, the invariant of the Nagata derivation.
inline Polynomial nagata_sigma() { return parse("X*Z + Y^2", ring_xyz()); }

/// D = -2*Y*sigma d/dX + Z*sigma d/dY on Q[X,Y,Z].
inline Derivation nagata_derivation() {
  auto ring = ring_xyz();
  return parse_derivation(
      std::vector<std::string>{"-2*Y*(X*Z+Y^2)", "Z*(X*Z+Y^2)", "0"}, ring);
}

/// N = (X - 2Y*sigma - Z*sigma^2, Y + Z*sigma, Z).
inline PolyMap nagata_map() {
  auto ring = ring_xyz();
  return parse_map(std::vector<std::string>{"X - 2*Y*(X*Z+Y^2) - Z*(X*Z+Y^2)^2",
                                            "Y + Z*(X*Z+Y^2)", "Z"},
                   ring);
}

/// The shear D = Y d/dX, whose exponential is (X+Y, Y).
inline Derivation shear_derivation() {
  auto ring = ring_xy();
  return parse_derivation(std::vector<std::string>{"Y", "0"}, ring);
}

/// D = Y^(d-2) d/dX + d/dY on Q[X,Y] for d >= 2.
inline Derivation monomial_shift_derivation(int d) {
  auto ring = ring_xy();
  std::string first = d == 2 ? "1" : "Y^" + std::to_string(d - 2);
  return parse_derivation(std::vector<std::string>{first, "1"}, ring);
}

/// Random triangular derivation in 3 variables: each image depends only
/// on strictly later variables, so local nilpotency is guaranteed. The
/// last image is a constant (possibly zero).
inline Derivation random_triangular_derivation(std::mt19937_64& rng, int max_degree,
                                               int max_terms, std::int64_t coeff_bound) {
  auto ring = ring_xyz();
  auto random_in_tail = [&](std::size_t first_allowed) {
    Polynomial::TermMap terms;
    int nterms = static_cast<int>(random_int(rng, 0, max_terms));
    for (int t = 0; t < nterms; ++t) {
      std::vector<std::int64_t> exps(3, 0);
      if (first_allowed < 3) {
        std::int64_t budget = random_int(rng, 0, max_degree);
        for (std::int64_t u = 0; u < budget; ++u)
          ++exps[static_cast<std::size_t>(
              random_int(rng, static_cast<std::int64_t>(first_allowed), 2))];
      }
      terms.try_emplace(Monomial(std::move(exps))).first->second +=
          random_rational(rng, coeff_bound);
    }
    return Polynomial(ring, std::move(terms));
  };
  return Derivation(ring, {random_in_tail(1), random_in_tail(2), random_in_tail(3)});
}

}  // namespace testutil
