#include "lndexp/kernels.hpp"

#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lndexp::kernels {

bool parallel_enabled() {
#ifdef _OPENMP
  static const bool forced_serial = [] {
    const char* v = std::getenv("LNDEXP_SERIAL");
    return v != nullptr && v[0] == '1';
  }();
  return !forced_serial;
#else
  return false;
#endif
}

namespace {

using TermMap = Polynomial::TermMap;

void add_into(TermMap& acc, const TermMap& part) {
  for (const auto& [mono, coeff] : part) acc.try_emplace(mono).first->second += coeff;
}

void prune_zeros(TermMap& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
}

void mul_block(const std::vector<const TermMap::value_type*>& lhs, std::size_t begin,
               std::size_t end, const TermMap& b, TermMap& out) {
  for (std::size_t i = begin; i < end; ++i) {
    const auto& [ma, ca] = *lhs[i];
    for (const auto& [mb, cb] : b) {
      out.try_emplace(ma.times(mb)).first->second += ca * cb;
    }
  }
}

}  // namespace

TermMap mul_serial(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      out.try_emplace(ma.times(mb)).first->second += ca * cb;
    }
  }
  prune_zeros(out);
  return out;
}

TermMap mul_parallel(const TermMap& a, const TermMap& b) {
#ifdef _OPENMP
  // Partition the left factor; each thread expands its slice into a
  // private map. Exact arithmetic makes the merge order irrelevant to
  // the value, and the merge itself runs in thread-index order, so the
  // result is identical to the serial product.
  std::vector<const TermMap::value_type*> lhs;
  lhs.reserve(a.size());
  for (const auto& term : a) lhs.push_back(&term);

  int nthreads = omp_get_max_threads();
  std::vector<TermMap> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
  {
    int t = omp_get_thread_num();
    std::size_t chunk = (lhs.size() + nthreads - 1) / nthreads;
    std::size_t begin = std::min(lhs.size(), chunk * static_cast<std::size_t>(t));
    std::size_t end = std::min(lhs.size(), begin + chunk);
    mul_block(lhs, begin, end, b, partial[static_cast<std::size_t>(t)]);
  }

  TermMap out = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t) add_into(out, partial[t]);
  prune_zeros(out);
  return out;
#else
  return mul_serial(a, b);
#endif
}

TermMap mul_auto(const TermMap& a, const TermMap& b) {
  if (parallel_enabled() && a.size() * b.size() >= kMulParallelCutoff)
    return a.size() >= b.size() ? mul_parallel(a, b) : mul_parallel(b, a);
  return mul_serial(a, b);
}

namespace {

// Shared power table: powers[v][e] = images[v]^e for every exponent e of
// X_v that occurs in p.
std::vector<std::vector<Polynomial>> build_power_table(const Polynomial& p,
                                                       std::span<const Polynomial> images) {
  std::size_t n = p.nvars();
  std::vector<std::int64_t> max_exp(n, 0);
  for (const auto& [mono, coeff] : p.terms())
    for (std::size_t v = 0; v < n; ++v)
      if (mono.exponent(v) > max_exp[v]) max_exp[v] = mono.exponent(v);

  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t v = 0; v < n; ++v) {
    powers[v].push_back(Polynomial::constant(p.ring(), Rational(1)));
    for (std::int64_t e = 1; e <= max_exp[v]; ++e)
      powers[v].push_back(powers[v].back() * images[v]);
  }
  return powers;
}

TermMap substitute_term(const Polynomial& p, const Monomial& mono, const Rational& coeff,
                        const std::vector<std::vector<Polynomial>>& powers) {
  Polynomial value = Polynomial::constant(p.ring(), coeff);
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    std::int64_t e = mono.exponent(v);
    if (e > 0) value = value * powers[v][static_cast<std::size_t>(e)];
  }
  return value.terms();
}

}  // namespace

Polynomial substitute_serial(const Polynomial& p, std::span<const Polynomial> images) {
  auto powers = build_power_table(p, images);
  TermMap acc;
  for (const auto& [mono, coeff] : p.terms())
    add_into(acc, substitute_term(p, mono, coeff, powers));
  prune_zeros(acc);
  return Polynomial(p.ring(), std::move(acc));
}

Polynomial substitute_parallel(const Polynomial& p, std::span<const Polynomial> images) {
#ifdef _OPENMP
  auto powers = build_power_table(p, images);
  std::vector<const TermMap::value_type*> terms;
  terms.reserve(p.terms().size());
  for (const auto& term : p.terms()) terms.push_back(&term);

  int nthreads = omp_get_max_threads();
  std::vector<TermMap> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
  {
    int t = omp_get_thread_num();
    TermMap& local = partial[static_cast<std::size_t>(t)];
#pragma omp for schedule(dynamic)
    for (std::size_t i = 0; i < terms.size(); ++i)
      add_into(local, substitute_term(p, terms[i]->first, terms[i]->second, powers));
  }

  TermMap acc = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t) add_into(acc, partial[t]);
  prune_zeros(acc);
  return Polynomial(p.ring(), std::move(acc));
#else
  return substitute_serial(p, images);
#endif
}

Polynomial substitute_auto(const Polynomial& p, std::span<const Polynomial> images) {
  if (parallel_enabled() && p.terms().size() >= kSubstituteParallelCutoff)
    return substitute_parallel(p, images);
  return substitute_serial(p, images);
}

}  // namespace lndexp::kernels
