#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lndexp/polymap.hpp"
#include "lndexp/polynomial.hpp"

namespace lndexp {

/// There is no a priori bound on nilpotency indices for arbitrary input,
/// so iteration stops at a cap; running past it reports NotDetected or
/// throws CapExceeded rather than claiming non-nilpotency.
inline constexpr std::uint64_t kDefaultIterationCap = 512;

/// A derivation of the polynomial ring, determined by the images of the
/// generators: D = sum_i images[i] * d/dX_i, so images[i] = D(X_i).
/// Application to any polynomial follows by linearity and the Leibniz
/// rule.
class Derivation {
 public:
  Derivation(RingPtr ring, std::vector<Polynomial> images);

  static Derivation zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return images_.size(); }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }
  std::span<const Polynomial> images() const { return images_; }

  /// D(p) = sum_i images[i] * dp/dX_i.
  Polynomial apply(const Polynomial& p) const;

  /// D applied m times; m = 0 returns p unchanged.
  Polynomial iterate_apply(const Polynomial& p, std::uint64_t m) const;

  Derivation operator-() const;
  Derivation scaled(const Rational& c) const;
  friend Derivation operator+(const Derivation& d, const Derivation& e);

  bool operator==(const Derivation& other) const {
    return same_ring(ring_, other.ring_) && images_ == other.images_;
  }
  bool operator!=(const Derivation& other) const { return !(*this == other); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> images_;
};

/// Least m with D^m(p) = 0, searched up to the cap; the zero polynomial
/// has index 0. Empty result means not detected within the cap, which is
/// not a proof of non-nilpotency.
std::optional<std::uint64_t> nilpotency_index(const Derivation& d, const Polynomial& p,
                                              std::uint64_t cap = kDefaultIterationCap);

/// Nilpotency data of D on the generators. Vanishing on generators
/// certifies local nilpotency on the whole ring (Leibniz closure), and
/// the degree is the max of the per-generator indices.
struct NilpotencyReport {
  std::optional<std::uint64_t> degree;
  std::vector<std::optional<std::uint64_t>> per_variable;
  std::uint64_t cap_used = 0;

  bool detected() const { return degree.has_value(); }
};

NilpotencyReport nilpotency_degree(const Derivation& d, std::uint64_t cap = kDefaultIterationCap);

/// exp(D)(p) = sum_i D^i(p)/i!, a finite sum for locally nilpotent D.
/// The scalar 1/i! is carried incrementally (each step multiplies the
/// previous term by 1/i). Throws CapExceeded if the series has not
/// terminated after cap iterations.
Polynomial exp_apply(const Derivation& d, const Polynomial& p,
                     std::uint64_t cap = kDefaultIterationCap);

/// The exponential map F = (exp(D)(X_1), ..., exp(D)(X_n)).
PolyMap exp_map(const Derivation& d, std::uint64_t cap = kDefaultIterationCap);

}  // namespace lndexp
