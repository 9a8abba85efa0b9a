#include <doctest.h>

#include <random>

#include "lndexp/polynomial.hpp"
#include "lndexp/textio.hpp"
#include "testutil.hpp"

using namespace lndexp;
using testutil::parse;
using testutil::ring_xy;
using testutil::ring_xyz;

TEST_CASE("addition merges and cancels terms") {
  auto ring = ring_xyz();
  CHECK(parse("X + Y", ring) + parse("X - Y", ring) == parse("2*X", ring));
  auto p = parse("X*Z + Y^2", ring);
  CHECK(p + Polynomial::zero(ring) == p);
  CHECK(parse("X*Z + Y^2", ring) + parse("X*Z", ring) == parse("2*X*Z + Y^2", ring));
}

TEST_CASE("multiplication expands products") {
  auto ring = ring_xyz();
  CHECK(parse("X + Y", ring) * parse("X - Y", ring) == parse("X^2 - Y^2", ring));
  auto p = parse("3*X^2 - Y*Z + 1/2", ring);
  CHECK(p * Polynomial::constant(ring, Rational(1)) == p);
  auto sigma = testutil::nagata_sigma();
  CHECK(sigma * sigma == parse("X^2*Z^2 + 2*X*Y^2*Z + Y^4", ring));
}

TEST_CASE("operations on different rings are rejected") {
  CHECK_THROWS_AS(parse("X", ring_xyz()) + parse("X", ring_xy()), RingMismatch);
  CHECK_THROWS_AS(parse("X", ring_xyz()) * parse("X", ring_xy()), RingMismatch);
}

TEST_CASE("partial derivatives") {
  auto ring = ring_xyz();
  CHECK(partial_derivative(parse("X^2*Z", ring), 0) == parse("2*X*Z", ring));
  CHECK(partial_derivative(parse("X*Z", ring), 1).is_zero());
  CHECK(partial_derivative(parse("X*Z + Y^2", ring), 1) == parse("2*Y", ring));
  CHECK_THROWS_AS(partial_derivative(parse("X", ring), 3), IndexOutOfRange);
}

TEST_CASE("substitution applies the endomorphism view") {
  auto ring = ring_xyz();
  auto identity = PolyMap::identity(ring);
  auto p = parse("X^2 + Y", ring);
  CHECK(substitute(p, identity) == p);

  // sigma is invariant under the Nagata map.
  auto sigma = testutil::nagata_sigma();
  CHECK(substitute(sigma, testutil::nagata_map()) == sigma);

  auto ring2 = ring_xy();
  auto shear = parse_map(std::vector<std::string>{"X + Y", "Y"}, ring2);
  CHECK(substitute(parse("X", ring2), shear) == parse("X + Y", ring2));
}

TEST_CASE("substitution arity errors") {
  auto ring = ring_xyz();
  std::vector<Polynomial> too_few{Polynomial::variable(ring, 0)};
  CHECK_THROWS_AS(substitute(parse("X", ring), std::span<const Polynomial>(too_few)),
                  ArityMismatch);
}

TEST_CASE("degrees, with the zero polynomial below everything") {
  auto ring = ring_xyz();
  CHECK(total_degree(parse("X*Z + Y^2", ring)) == 2);
  CHECK(degree_in(parse("Y^2*Z + Y", ring), 1) == 2);
  CHECK_FALSE(total_degree(Polynomial::zero(ring)).has_value());
  CHECK_FALSE(degree_in(Polynomial::zero(ring), 0).has_value());
  CHECK(total_degree(Polynomial::constant(ring, Rational(5))) == 0);
  // max-composition stays safe with the empty degree
  CHECK(std::max(total_degree(Polynomial::zero(ring)), total_degree(parse("X", ring))) == 1);
}

TEST_CASE("pow matches repeated multiplication") {
  auto ring = ring_xyz();
  auto p = parse("X + 2*Y - Z^2", ring);
  Polynomial q = Polynomial::constant(ring, Rational(1));
  for (int k = 0; k <= 5; ++k) {
    CHECK(pow(p, static_cast<std::uint64_t>(k)) == q);
    q = q * p;
  }
  CHECK(pow(parse("-1/2*X", ring), 3) == parse("-1/8*X^3", ring));
}

TEST_CASE("ring axioms hold on randomized inputs") {
  auto ring = ring_xyz();
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 40; ++iter) {
    auto a = random_polynomial(ring, rng, 4, 5, 6);
    auto b = random_polynomial(ring, rng, 4, 5, 6);
    auto c = random_polynomial(ring, rng, 4, 5, 6);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial::zero(ring));
  }
}

TEST_CASE("derivative satisfies the product rule") {
  auto ring = ring_xyz();
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    auto p = random_polynomial(ring, rng, 4, 5, 6);
    auto q = random_polynomial(ring, rng, 4, 5, 6);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK(partial_derivative(p * q, v) ==
            partial_derivative(p, v) * q + p * partial_derivative(q, v));
    }
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  auto ring = ring_xyz();
  std::mt19937_64 rng(7);
  auto f = parse_map(std::vector<std::string>{"X + Y^2", "Y - 1", "X*Z"}, ring);
  for (int iter = 0; iter < 25; ++iter) {
    auto p = random_polynomial(ring, rng, 3, 4, 5);
    auto q = random_polynomial(ring, rng, 3, 4, 5);
    CHECK(substitute(p + q, f) == substitute(p, f) + substitute(q, f));
    CHECK(substitute(p * q, f) == substitute(p, f) * substitute(q, f));
  }
}

TEST_CASE("coefficients stay in canonical form") {
  auto ring = ring_xyz();
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 30; ++iter) {
    auto p = random_polynomial(ring, rng, 4, 5, 9);
    auto q = random_polynomial(ring, rng, 4, 5, 9);
    for (const auto& r : {p + q, p - q, p * q}) {
      for (const auto& [mono, coeff] : r.terms()) {
        CHECK(coeff != 0);  // canonical form stores no zero terms
        CHECK(is_canonical(coeff));
      }
    }
  }
}

TEST_CASE("monomial exponent overflow is detected") {
  auto ring = ring_xyz();
  auto big = pow(parse("X", ring), static_cast<std::uint64_t>(1) << 62);
  CHECK_THROWS_AS(big * big, OverflowError);
  CHECK_THROWS_AS(pow(big, 4), OverflowError);
}
