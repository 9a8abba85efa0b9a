#pragma once

#include <cstddef>
#include <vector>

#include "lndexp/rational.hpp"

namespace lndexp {

/// Dense matrix of exact rationals, row-major.
class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Dense matrix of exact integers, row-major.
class ZMatrix {
 public:
  ZMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void swap_rows(std::size_t i, std::size_t j);

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> a_;
};

/// Clears denominators row by row (each row times the lcm of its
/// denominators), which preserves rank and the solution set of any
/// system whose right-hand side is carried as an extra column.
ZMatrix scale_rows_to_integer(const QMatrix& m);

/// Row echelon form by fraction-free Bareiss elimination with column
/// skipping; every division is exact. Returns the pivot columns in
/// ascending order; their count is the rank.
struct Echelon {
  ZMatrix mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon bareiss_echelon_serial(ZMatrix m);
Echelon bareiss_echelon_parallel(ZMatrix m);
Echelon bareiss_echelon(ZMatrix m);  // dispatches on size

std::size_t rank(const QMatrix& m);

/// Exact solution of A x = b.
struct LinearSolve {
  enum class Status { kUnique, kInconsistent, kUnderdetermined };
  Status status;
  std::vector<Rational> solution;  // populated only for kUnique
};

LinearSolve solve_exact(const QMatrix& a, const std::vector<Rational>& b);

inline constexpr std::size_t kEliminationParallelCutoff = 4096;  // rows * cols

}  // namespace lndexp
