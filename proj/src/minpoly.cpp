#include "lndexp/minpoly.hpp"

#include <map>
#include <string>

#include "lndexp/combinat.hpp"
#include "lndexp/linalg.hpp"

namespace lndexp {

namespace {

using MonomialIndex = std::map<Monomial, std::size_t, GrlexDescending>;

// Row indexing for one component slot: every monomial that occurs in any
// of the given polynomials gets a row.
MonomialIndex index_monomials(std::span<const Polynomial> polys) {
  MonomialIndex index;
  for (const auto& p : polys)
    for (const auto& [mono, coeff] : p.terms()) index.try_emplace(mono);
  std::size_t next = 0;
  for (auto& [mono, row] : index) row = next++;
  return index;
}

// Coefficient matrix with one column per polynomial.
QMatrix coefficient_matrix(std::span<const Polynomial> cols, const MonomialIndex& index) {
  QMatrix m(index.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [mono, coeff] : cols[j].terms()) m.at(index.at(mono), j) = coeff;
  return m;
}

// Stacks all components of all maps: column j holds the full coefficient
// vector of maps[j], components concatenated over per-component monomial
// unions.
QMatrix stack_map_coefficients(std::span<const PolyMap> maps) {
  const std::size_t n = maps.empty() ? 0 : maps.front().size();
  std::vector<MonomialIndex> indices;
  std::size_t rows = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> slot;
    slot.reserve(maps.size());
    for (const auto& f : maps) slot.push_back(f.component(i));
    indices.push_back(index_monomials(slot));
    rows += indices.back().size();
  }

  QMatrix m(rows, maps.size());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j)
      for (const auto& [mono, coeff] : maps[j].component(i).terms())
        m.at(offset + indices[i].at(mono), j) = coeff;
    offset += indices[i].size();
  }
  return m;
}

std::vector<Rational> column(const QMatrix& m, std::size_t j) {
  std::vector<Rational> v;
  v.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m.at(i, j));
  return v;
}

QMatrix drop_last_column(const QMatrix& m) {
  QMatrix out(m.rows(), m.cols() - 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j + 1 < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace

PolyMap eval_poly_at_map(const UniPoly& p, const PolyMap& f) {
  PolyMap acc = PolyMap::zero(f.ring());
  PolyMap iterate = PolyMap::identity(f.ring());
  const auto& coeffs = p.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j > 0) iterate = compose(iterate, f);
    if (coeffs[j] != 0) acc = acc + coeffs[j] * iterate;
  }
  return acc;
}

MinpolyResult minpoly_exponential(const Derivation& d, std::uint64_t cap) {
  NilpotencyReport report = nilpotency_degree(d, cap);
  if (!report.detected())
    throw CapExceeded("nilpotency degree not detected within cap " + std::to_string(cap), cap);
  const std::uint64_t deg = *report.degree;
  // (T - 1)^d, expanded with alternating binomial coefficients.
  std::vector<Rational> coeffs;
  coeffs.reserve(deg + 1);
  for (std::uint64_t j = 0; j <= deg; ++j) {
    BigInt c = binomial(deg, j);
    if ((deg - j) % 2 == 1) c = -c;
    coeffs.emplace_back(c);
  }
  return MinpolyResult{UniPoly(std::move(coeffs)), deg, Certificate::kTheorem};
}

std::optional<MinpolyResult> minpoly_bruteforce(const PolyMap& f, std::uint64_t max_degree) {
  std::vector<PolyMap> iterates;
  iterates.push_back(PolyMap::identity(f.ring()));
  for (std::uint64_t m = 1; m <= max_degree; ++m) {
    iterates.push_back(compose(iterates.back(), f));

    // Re-eliminate from scratch over the support union of all iterates
    // seen so far; m is small at the scales this tool targets.
    QMatrix stacked = stack_map_coefficients(iterates);
    std::vector<Rational> target = column(stacked, m);
    LinearSolve solve = solve_exact(drop_last_column(stacked), target);
    if (solve.status == LinearSolve::Status::kInconsistent) continue;
    if (solve.status == LinearSolve::Status::kUnderdetermined)
      throw Error("iterate dependence found before the first monic dependence");

    // Monic dependence F^(m) = sum_{j<m} c_j F^(j); the earlier iterates
    // have full rank, so this is the unique one and T^m - sum c_j T^j
    // generates the annihilating ideal.
    std::vector<Rational> coeffs(m + 1, Rational(0));
    for (std::uint64_t j = 0; j < m; ++j) coeffs[j] = -solve.solution[j];
    coeffs[m] = 1;
    return MinpolyResult{UniPoly(std::move(coeffs)), m, Certificate::kLinearAlgebra};
  }
  return std::nullopt;
}

PolyMap invert_exponential(const Derivation& d, std::uint64_t cap) {
  NilpotencyReport report = nilpotency_degree(d, cap);
  if (!report.detected())
    throw CapExceeded("nilpotency degree not detected within cap " + std::to_string(cap), cap);
  const std::uint64_t deg = *report.degree;
  std::vector<Rational> coeffs;
  coeffs.reserve(deg);
  for (std::uint64_t m = 0; m < deg; ++m) {
    BigInt c = binomial(deg, m + 1);
    if (m % 2 == 1) c = -c;
    coeffs.emplace_back(c);
  }
  return eval_poly_at_map(UniPoly(std::move(coeffs)), exp_map(d, cap));
}

IndependenceReport iterates_linearly_independent(const Derivation& d, const Polynomial& p,
                                                 std::uint64_t cap) {
  auto nu = nilpotency_index(d, p, cap);
  if (!nu)
    throw CapExceeded("nilpotency index not detected within cap " + std::to_string(cap), cap);

  IndependenceReport report;
  report.index = *nu;
  if (*nu == 0) return report;  // empty family, vacuously independent

  std::vector<Polynomial> iterates;
  iterates.reserve(*nu);
  iterates.push_back(p);
  for (std::uint64_t i = 1; i < *nu; ++i) iterates.push_back(d.apply(iterates.back()));

  MonomialIndex index = index_monomials(iterates);
  QMatrix m = coefficient_matrix(iterates, index);
  if (rank(m) == iterates.size()) return report;

  // Dependence exists; locate the first dependent iterate and hand back
  // its coefficients as the witness.
  report.independent = false;
  for (std::size_t k = 1; k < iterates.size(); ++k) {
    QMatrix lhs(index.size(), k);
    for (std::size_t i = 0; i < index.size(); ++i)
      for (std::size_t j = 0; j < k; ++j) lhs.at(i, j) = m.at(i, j);
    LinearSolve solve = solve_exact(lhs, column(m, k));
    if (solve.status == LinearSolve::Status::kUnique) {
      report.dependence = std::move(solve.solution);
      break;
    }
  }
  return report;
}

}  // namespace lndexp
