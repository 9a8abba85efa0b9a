#include "lndexp/logmap.hpp"

#include <string>

#include "lndexp/combinat.hpp"

namespace lndexp {

Derivation log_map(const PolyMap& f, std::uint64_t max_degree) {
  auto result = minpoly_bruteforce(f, max_degree);
  if (!result)
    throw NotUnipotent("map is not locally finite within degree bound " +
                       std::to_string(max_degree));
  const std::uint64_t deg = static_cast<std::uint64_t>(*result->minpoly.degree());
  if (result->minpoly != pow(UniPoly::t_minus(Rational(1)), deg))
    throw NotUnipotent("minimal polynomial is not a power of (T - 1)");

  const RingPtr& ring = f.ring();
  std::vector<Polynomial> images;
  images.reserve(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    // E(p) = p(F) - p applied repeatedly to the generator; only the
    // first d-1 summands of the log series are nonzero.
    Polynomial e = f.component(v) - Polynomial::variable(ring, v);
    Polynomial acc = Polynomial::zero(ring);
    for (std::uint64_t m = 1; m + 1 <= deg; ++m) {
      if (m > 1) e = substitute(e, f) - e;
      Rational scalar = make_rational(BigInt(m % 2 == 1 ? 1 : -1),
                                      BigInt(static_cast<unsigned long>(m)));
      acc = acc + scalar * e;
    }
    images.push_back(std::move(acc));
  }
  return Derivation(ring, std::move(images));
}

Derivation triangular_log(const Polynomial& g, const Polynomial& h) {
  const RingPtr& ring = g.ring();
  require_same_ring(ring, h.ring());
  if (ring->size() != 3) throw InvalidArgument("triangular form needs a three-variable ring");
  if (g.is_zero() || h.is_zero())
    throw InvalidArgument("triangular closed form requires g != 0 and h != 0");
  if (degree_in(g, 0).value_or(0) > 0)
    throw InvalidArgument("g may only involve the second and third variables");
  if (degree_in(h, 0).value_or(0) > 0 || degree_in(h, 1).value_or(0) > 0)
    throw InvalidArgument("h may only involve the third variable");

  const std::uint64_t deg = 2 + static_cast<std::uint64_t>(*degree_in(g, 1));

  Polynomial x = Polynomial::variable(ring, 0);
  PolyMap f(ring, {x + g, Polynomial::variable(ring, 1) + h, Polynomial::variable(ring, 2)});

  // Double sum over iterates of F for the first image.
  Polynomial dx = Polynomial::zero(ring);
  PolyMap iterate = PolyMap::identity(ring);
  std::vector<Polynomial> first_components;  // (F^(i))_1 - X for i = 1..d-1
  for (std::uint64_t i = 1; i + 1 <= deg; ++i) {
    iterate = compose(iterate, f);
    first_components.push_back(iterate.component(0) - x);
  }
  for (std::uint64_t m = 1; m + 1 <= deg; ++m) {
    for (std::uint64_t i = 1; i <= m; ++i) {
      BigInt num = binomial(m, i);
      if (i % 2 == 0) num = -num;
      dx = dx + make_rational(num, BigInt(static_cast<unsigned long>(m))) *
                    first_components[i - 1];
    }
  }

  return Derivation(ring, {std::move(dx), h, Polynomial::zero(ring)});
}

}  // namespace lndexp
