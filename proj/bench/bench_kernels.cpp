// Compares the serial reference kernels against their OpenMP versions on
// sizable random inputs and prints a timing table. Results are checked
// for equality as a side effect; a mismatch aborts.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "lndexp/kernels.hpp"
#include "lndexp/linalg.hpp"
#include "lndexp/polymap.hpp"
#include "lndexp/random_poly.hpp"
#include "lndexp/textio.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace lndexp;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double time_best_of(Fn&& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = now_seconds();
    fn();
    best = std::min(best, now_seconds() - t0);
  }
  return best;
}

void report(const char* kernel, const char* size, double serial, double parallel, bool match) {
  std::printf("%-12s %-18s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", kernel,
              size, serial * 1e3, parallel * 1e3, serial / parallel,
              match ? "values match" : "MISMATCH");
  if (!match) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  if (scale < 1) scale = 1;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  auto ring = make_ring({"X", "Y", "Z"});
  std::mt19937_64 rng(7777);

  {
    auto a = random_polynomial(ring, rng, 16, 220 * scale, 99);
    auto b = random_polynomial(ring, rng, 16, 220 * scale, 99);
    Polynomial::TermMap serial_result, parallel_result;
    double ts = time_best_of([&] { serial_result = kernels::mul_serial(a.terms(), b.terms()); }, 3);
    double tp =
        time_best_of([&] { parallel_result = kernels::mul_parallel(a.terms(), b.terms()); }, 3);
    char size[64];
    std::snprintf(size, sizeof size, "%zux%zu terms", a.terms().size(), b.terms().size());
    report("multiply", size, ts, tp, serial_result == parallel_result);
  }

  {
    auto p = random_polynomial(ring, rng, 12, 160 * scale, 99);
    auto f = parse_map(std::vector<std::string>{"X + Y^2 - Z", "Y + 2*Z^2", "Z - X*Y"}, ring);
    Polynomial serial_result = Polynomial::zero(ring);
    Polynomial parallel_result = Polynomial::zero(ring);
    double ts =
        time_best_of([&] { serial_result = kernels::substitute_serial(p, f.components()); }, 3);
    double tp = time_best_of(
        [&] { parallel_result = kernels::substitute_parallel(p, f.components()); }, 3);
    char size[64];
    std::snprintf(size, sizeof size, "%zu terms", p.terms().size());
    report("substitute", size, ts, tp, serial_result == parallel_result);
  }

  {
    std::size_t rows = 120 * static_cast<std::size_t>(scale);
    std::size_t cols = 60;
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = Rational(static_cast<long>(random_int(rng, -99, 99)));
    ZMatrix z = scale_rows_to_integer(m);
    Echelon serial_result{ZMatrix(0, 0), {}};
    Echelon parallel_result{ZMatrix(0, 0), {}};
    double ts = time_best_of([&] { serial_result = bareiss_echelon_serial(z); }, 2);
    double tp = time_best_of([&] { parallel_result = bareiss_echelon_parallel(z); }, 2);
    bool match = serial_result.pivot_cols == parallel_result.pivot_cols;
    for (std::size_t i = 0; match && i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (serial_result.mat.at(i, j) != parallel_result.mat.at(i, j)) {
          match = false;
          break;
        }
    char size[64];
    std::snprintf(size, sizeof size, "%zux%zu", rows, cols);
    report("elimination", size, ts, tp, match);
  }

  return 0;
}
