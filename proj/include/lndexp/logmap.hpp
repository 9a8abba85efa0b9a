#pragma once

#include <cstdint>

#include "lndexp/derivation.hpp"
#include "lndexp/minpoly.hpp"
#include "lndexp/polymap.hpp"

namespace lndexp {

/// Formal logarithm of a unipotent map: with E(p) = p(F) - p, returns
/// the derivation D(X_i) = sum_{m=1}^{d-1} ((-1)^(m+1)/m) E^m(X_i). The
/// series truncates exactly because the minimal polynomial of F is
/// (T - 1)^d, which kills E^d on the generators. Throws NotUnipotent if
/// the brute-force minimal polynomial is not a power of (T - 1), and
/// propagates the not-locally-finite case as NotUnipotent too.
Derivation log_map(const PolyMap& f, std::uint64_t max_degree = kDefaultMaxDegree);

/// Closed-form logarithm of the triangular map F = (X + g(Y,Z),
/// Y + h(Z), Z) on a three-variable ring, valid for g != 0 and h != 0:
/// d = 2 + deg_Y g, D(Z) = 0, D(Y) = h, and D(X) is the double sum
///   sum_{m=1}^{d-1} sum_{i=1}^{m} ((-1)^(i+1)/m) C(m,i) ((F^(i))_1 - X).
/// The degenerate cases g = 0 or h = 0 belong to log_map directly.
Derivation triangular_log(const Polynomial& g, const Polynomial& h);

}  // namespace lndexp
