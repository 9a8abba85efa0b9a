#pragma once

#include <span>
#include <string>
#include <string_view>

#include "lndexp/derivation.hpp"
#include "lndexp/polymap.hpp"
#include "lndexp/polynomial.hpp"
#include "lndexp/unipoly.hpp"

namespace lndexp {

// The canonical text format used by all CLI inputs and outputs. Tokens:
// rational literals like `3` or `-2/5` (no whitespace around `/`),
// variable identifiers, and `+ - * ^ ( )`. Multiplication is always
// explicit; `X1 X2` without `*` is a syntax error, since multi-character
// names make implicit products ambiguous. Unary minus binds to the whole
// term. Printing uses descending graded-lex term order, suppresses `^1`
// and unit coefficients on nonconstant terms, and prints zero as `0`, so
// parse(format(p)) == p.

Polynomial parse_poly(std::string_view text, const RingPtr& ring);
PolyMap parse_map(std::span<const std::string> components, const RingPtr& ring);
Derivation parse_derivation(std::span<const std::string> images, const RingPtr& ring);

std::string format_poly(const Polynomial& p);
std::string format_unipoly(const UniPoly& p, std::string_view var = "T");

/// Validates names as identifiers and builds the ring.
RingPtr ring_from_names(std::span<const std::string> names);

}  // namespace lndexp
