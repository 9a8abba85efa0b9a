#include "lndexp/linalg.hpp"

#include <cstdint>

#include "lndexp/errors.hpp"
#include "lndexp/kernels.hpp"

namespace lndexp {

void ZMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
}

ZMatrix scale_rows_to_integer(const QMatrix& m) {
  ZMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt lcm(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      out.at(i, j) = q.get_num() * (lcm / q.get_den());
    }
  }
  return out;
}

namespace {

// Hadamard-style bit bound for the minors Bareiss stores: a k x k minor
// of entries below 2^b has at most k*b + k*log2(k)/2 + 1 bits. Entries
// are preallocated to that bound so row updates never reallocate limbs
// mid-elimination (reallocation is what serializes the parallel loop).
std::size_t minor_bit_bound(const ZMatrix& m) {
  std::size_t maxbits = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0)
        maxbits = std::max(maxbits, mpz_sizeinbase(m.at(i, j).get_mpz_t(), 2));
  std::size_t k = std::min(m.rows(), m.cols());
  std::size_t log2k = 0;
  while ((std::size_t{1} << log2k) < k) ++log2k;
  return k * maxbits + k * (log2k + 1) / 2 + 2;
}

template <bool Parallel>
Echelon bareiss_echelon_impl(ZMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  BigInt prev_pivot(1);
  std::size_t r = 0;

  constexpr std::size_t kPreallocCapBits = std::size_t{1} << 20;
  std::size_t bound = minor_bit_bound(m);
  if (bound <= kPreallocCapBits) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) mpz_realloc2(m.at(i, j).get_mpz_t(), bound);
  }

  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // First nonzero entry in the column at or below r; deterministic.
    std::size_t pr = r;
    while (pr < rows && m.at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    m.swap_rows(r, pr);

    const BigInt& pivot = m.at(r, c);
#ifdef _OPENMP
#pragma omp parallel if (Parallel && rows - r > 1)
#endif
    {
      BigInt t;  // reused across rows to avoid allocator churn
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m.at(i, c) == 0) {
          // Still needs the Bareiss rescale to keep the minor invariant.
          for (std::size_t j = c + 1; j < cols; ++j) {
            mpz_mul(t.get_mpz_t(), m.at(i, j).get_mpz_t(), pivot.get_mpz_t());
            mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
          }
        } else {
          for (std::size_t j = c + 1; j < cols; ++j) {
            mpz_mul(t.get_mpz_t(), m.at(i, j).get_mpz_t(), pivot.get_mpz_t());
            mpz_submul(t.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, j).get_mpz_t());
            mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
          }
          m.at(i, c) = 0;
        }
      }
    }
    prev_pivot = pivot;
    pivot_cols.push_back(c);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivot_cols)};
}

}  // namespace

Echelon bareiss_echelon_serial(ZMatrix m) { return bareiss_echelon_impl<false>(std::move(m)); }

Echelon bareiss_echelon_parallel(ZMatrix m) { return bareiss_echelon_impl<true>(std::move(m)); }

Echelon bareiss_echelon(ZMatrix m) {
  if (kernels::parallel_enabled() && m.rows() * m.cols() >= kEliminationParallelCutoff)
    return bareiss_echelon_parallel(std::move(m));
  return bareiss_echelon_serial(std::move(m));
}

std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_echelon(scale_rows_to_integer(m)).rank();
}

LinearSolve solve_exact(const QMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length mismatch");
  const std::size_t n = a.cols();
  QMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }

  Echelon e = bareiss_echelon(scale_rows_to_integer(aug));
  for (std::size_t p : e.pivot_cols)
    if (p == n) return {LinearSolve::Status::kInconsistent, {}};
  if (e.rank() < n) return {LinearSolve::Status::kUnderdetermined, {}};

  // Full column rank and consistent: pivots sit on the diagonal.
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(e.mat.at(ii, n));
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(e.mat.at(ii, j)) * x[j];
    x[ii] = acc / Rational(e.mat.at(ii, ii));
  }
  return {LinearSolve::Status::kUnique, std::move(x)};
}

}  // namespace lndexp
