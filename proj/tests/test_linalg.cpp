#include <doctest.h>

#include <random>

#include "lndexp/linalg.hpp"
#include "lndexp/random_poly.hpp"

using namespace lndexp;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                      std::int64_t bound) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng, bound);
  return m;
}

}  // namespace

TEST_CASE("rank of hand-built matrices") {
  QMatrix m(3, 3);
  // Rows: (1,2,3), (2,4,6), (0,1,1) -> rank 2.
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  m.at(2, 1) = 1; m.at(2, 2) = 1;
  CHECK(rank(m) == 2);

  QMatrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(rank(id) == 4);

  QMatrix zero(3, 5);
  CHECK(rank(zero) == 0);
}

TEST_CASE("solve recovers a hand-checked solution") {
  // x + y = 3, x - y = 1 -> x = 2, y = 1.
  QMatrix a(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 1;
  a.at(1, 0) = 1; a.at(1, 1) = -1;
  auto solve = solve_exact(a, {Rational(3), Rational(1)});
  REQUIRE(solve.status == LinearSolve::Status::kUnique);
  CHECK(solve.solution[0] == 2);
  CHECK(solve.solution[1] == 1);
}

TEST_CASE("solve classifies inconsistent and underdetermined systems") {
  QMatrix a(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  CHECK(solve_exact(a, {Rational(1), Rational(2)}).status ==
        LinearSolve::Status::kInconsistent);

  QMatrix b(2, 2);  // rank-1 rows
  b.at(0, 0) = 1; b.at(0, 1) = 1;
  b.at(1, 0) = 2; b.at(1, 1) = 2;
  CHECK(solve_exact(b, {Rational(1), Rational(3)}).status ==
        LinearSolve::Status::kInconsistent);
  CHECK(solve_exact(b, {Rational(1), Rational(3)}).solution.empty());
  // consistent but rank-deficient: the same equation twice
  CHECK(solve_exact(b, {Rational(1), Rational(2)}).status ==
        LinearSolve::Status::kUnderdetermined);
  CHECK(solve_exact(b, {Rational(3), Rational(6)}).status ==
        LinearSolve::Status::kUnderdetermined);
}

TEST_CASE("solve on random full-rank systems reproduces planted solutions") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t n = 2 + static_cast<std::size_t>(random_int(rng, 0, 4));
    std::size_t rows = n + static_cast<std::size_t>(random_int(rng, 0, 3));
    QMatrix a = random_matrix(rng, rows, n, 7);
    std::vector<Rational> x;
    for (std::size_t j = 0; j < n; ++j) x.push_back(random_rational(rng, 7));
    std::vector<Rational> b(rows, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += a.at(i, j) * x[j];

    auto solve = solve_exact(a, b);
    if (solve.status == LinearSolve::Status::kUnique) {
      CHECK(solve.solution == x);
    } else {
      // Random square-ish matrices are occasionally singular; then the
      // planted system must still be consistent.
      CHECK(solve.status == LinearSolve::Status::kUnderdetermined);
    }
  }
}

TEST_CASE("serial and parallel elimination agree") {
  std::mt19937_64 rng(808);
  for (int iter = 0; iter < 6; ++iter) {
    std::size_t rows = 20 + static_cast<std::size_t>(random_int(rng, 0, 30));
    std::size_t cols = 10 + static_cast<std::size_t>(random_int(rng, 0, 10));
    QMatrix m = random_matrix(rng, rows, cols, 9);
    ZMatrix z = scale_rows_to_integer(m);
    Echelon serial = bareiss_echelon_serial(z);
    Echelon parallel = bareiss_echelon_parallel(z);
    CHECK(serial.pivot_cols == parallel.pivot_cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) CHECK(serial.mat.at(i, j) == parallel.mat.at(i, j));
  }
}

TEST_CASE("row scaling clears denominators without changing rank") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 10; ++iter) {
    QMatrix m = random_matrix(rng, 6, 5, 9);
    ZMatrix z = scale_rows_to_integer(m);
    QMatrix back(6, 5);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 5; ++j) back.at(i, j) = Rational(z.at(i, j));
    CHECK(rank(back) == rank(m));
  }
}
