#pragma once

#include <cstddef>
#include <span>

#include "lndexp/polynomial.hpp"

namespace lndexp::kernels {

// The compute-heavy inner loops of the library, each in a plain serial
// form and an OpenMP form producing identical results (rational
// arithmetic is exact, so reduction order cannot change a value). The
// serial versions are the references the tests and the benchmark compare
// against. Public entry points dispatch on input size.

/// True unless OpenMP is unavailable or LNDEXP_SERIAL=1 is set.
bool parallel_enabled();

// Term-expansion product of two term maps (same ring assumed).
Polynomial::TermMap mul_serial(const Polynomial::TermMap& a, const Polynomial::TermMap& b);
Polynomial::TermMap mul_parallel(const Polynomial::TermMap& a, const Polynomial::TermMap& b);
Polynomial::TermMap mul_auto(const Polynomial::TermMap& a, const Polynomial::TermMap& b);

// Substitution of images for variables, expanding term by term against a
// shared table of image powers.
Polynomial substitute_serial(const Polynomial& p, std::span<const Polynomial> images);
Polynomial substitute_parallel(const Polynomial& p, std::span<const Polynomial> images);
Polynomial substitute_auto(const Polynomial& p, std::span<const Polynomial> images);

// Dispatch thresholds (term-pair count / term count).
inline constexpr std::size_t kMulParallelCutoff = 4096;
inline constexpr std::size_t kSubstituteParallelCutoff = 32;

}  // namespace lndexp::kernels
