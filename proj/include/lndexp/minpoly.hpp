#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lndexp/derivation.hpp"
#include "lndexp/polymap.hpp"
#include "lndexp/unipoly.hpp"

namespace lndexp {

inline constexpr std::uint64_t kDefaultMaxDegree = 64;

enum class Certificate { kTheorem, kLinearAlgebra };

/// A monic annihilating polynomial of least degree, together with how it
/// was certified: by the nilpotency-degree formula for exponential maps,
/// or by exact linear algebra over the map's iterates.
struct MinpolyResult {
  UniPoly minpoly;
  std::uint64_t iterates_examined = 0;
  Certificate certified_by = Certificate::kTheorem;
};

/// p(F) = sum_j a_j F^(j), the componentwise rational-linear combination
/// of iterates of F. The result is the zero map exactly when p lies in
/// the annihilating ideal of F.
PolyMap eval_poly_at_map(const UniPoly& p, const PolyMap& f);

/// Minimal polynomial of F = exp(D): (T - 1)^d with d the nilpotency
/// degree of D on the generators. Throws CapExceeded if d is not
/// detected within the cap.
MinpolyResult minpoly_exponential(const Derivation& d, std::uint64_t cap = kDefaultIterationCap);

/// Definition-chasing route, independent of the exponential structure:
/// for m = 1, 2, ... stack the coefficient vectors of the iterates
/// F^(0), ..., F^(m) over the union of their monomial supports and look
/// for the least m admitting a monic dependence by exact fraction-free
/// elimination. Empty result: no dependence up to max_degree, i.e. F is
/// not locally finite within the bound.
std::optional<MinpolyResult> minpoly_bruteforce(const PolyMap& f,
                                                std::uint64_t max_degree = kDefaultMaxDegree);

/// Closed-form inverse of F = exp(D):
///   F^(-1) = sum_{m=0}^{d-1} (-1)^m C(d, m+1) F^(m).
PolyMap invert_exponential(const Derivation& d, std::uint64_t cap = kDefaultIterationCap);

/// Exact-rank check that D^0(p), ..., D^(nu-1)(p) are linearly
/// independent over the rationals, nu being the nilpotency index of p.
/// Independence is what local nilpotency forces for nonzero p; a
/// dependence, were one found, is returned as a witness.
struct IndependenceReport {
  bool independent = true;
  std::uint64_t index = 0;  // nu
  std::vector<Rational> dependence;  // coefficients alpha_i, on failure
};

IndependenceReport iterates_linearly_independent(const Derivation& d, const Polynomial& p,
                                                 std::uint64_t cap = kDefaultIterationCap);

}  // namespace lndexp
