#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lndexp/monomial.hpp"
#include "lndexp/rational.hpp"
#include "lndexp/ring.hpp"

namespace lndexp {

/// Degree convention: the zero polynomial has no degree (empty optional),
/// which orders below every finite degree, so max-based formulas compose.
using Degree = std::optional<std::int64_t>;

/// Sparse multivariate polynomial over the rationals, in canonical form:
/// terms keyed by monomial in descending graded-lex order, no stored
/// coefficient is zero. Values are immutable after construction and all
/// operations are pure, so concurrent reads are safe.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Rational& value);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }

  /// Coefficient of the given monomial, zero if absent.
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  bool operator==(const Polynomial& other) const {
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  RingPtr ring_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, std::uint64_t k);

/// Formal partial derivative with respect to the given variable.
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

/// Total degree; empty for the zero polynomial.
Degree total_degree(const Polynomial& p);

/// Degree in one variable; empty for the zero polynomial.
Degree degree_in(const Polynomial& p, std::size_t var_index);

/// Replaces each variable X_i by images[i] and expands: the ring
/// endomorphism determined by the images, applied to p. The images must
/// all live in p's ring, one per variable.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

}  // namespace lndexp
