#ifndef CRITPT_MACAULAY_HPP
#define CRITPT_MACAULAY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "critpt/critical_system.hpp"
#include "critpt/errors.hpp"
#include "critpt/groebner.hpp"
#include "critpt/hilbert.hpp"

namespace critpt {

/// (column, value) pairs with increasing column index.
using SparseRow = std::vector<std::pair<std::uint32_t, Coeff>>;

struct RowLabel {
  std::size_t generator;
  Monomial multiplier;
};

/// Coefficient matrix of all products mu * g with deg(mu * g) <= degree. Column 0 is the
/// grevlex-largest monomial of degree <= degree, the last column is 1.
struct MacaulayMatrix {
  RingPtr ring;
  int degree = 0;
  std::vector<Monomial> columns;
  std::vector<RowLabel> labels;  // empty after reduction
  std::vector<SparseRow> rows;
  std::size_t zero_rows = 0;     // rows that vanished during reduction
  bool reduced = false;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return columns.size(); }

  Polynomial row_polynomial(std::size_t r) const {
    std::vector<Term> terms;
    for (auto [c, v] : rows[r]) terms.push_back({columns[c], v});
    return Polynomial::from_sorted(ring, std::move(terms));
  }

  /// Leading monomial of each row is its first column.
  std::vector<std::uint32_t> pivots() const {
    std::vector<std::uint32_t> out;
    for (const auto& r : rows)
      if (!r.empty()) out.push_back(r.front().first);
    return out;
  }
};

/// Upper bound (p + C(n, p+1)) * C(n+d, n) on the number of rows.
inline std::uint64_t macaulay_row_bound(const ProblemShape& shape, int d) {
  return (static_cast<std::uint64_t>(shape.p) + binomial(shape.n, shape.p + 1)) * binomial(shape.n + d, shape.n);
}

inline MacaulayMatrix build_macaulay(const std::vector<Polynomial>& gens, int d) {
  if (gens.empty()) throw EmptyMatrixError("no generators");
  const RingPtr& ring = gens.front().ring();
  if (ring->order.kind() != OrderKind::grevlex) throw UndefinedInput("the Macaulay matrix is built in a grevlex ring");
  MacaulayMatrix M;
  M.ring = ring;
  M.degree = d;
  M.columns = monomials_up_to_degree(ring->grading, d);
  std::sort(M.columns.begin(), M.columns.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->order.greater(a, b); });
  std::unordered_map<Monomial, std::uint32_t, Monomial::Hash> col;
  col.reserve(M.columns.size() * 2);
  for (std::size_t i = 0; i < M.columns.size(); ++i) col.emplace(M.columns[i], static_cast<std::uint32_t>(i));

  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Polynomial& k = gens[g];
    if (k.is_zero()) continue;
    int kd = k.degree();
    if (kd > d) continue;
    for (const auto& mu : monomials_up_to_degree(ring->grading, d - kd)) {
      SparseRow row;
      row.reserve(k.size());
      // Terms of k are decreasing, multiplication by mu preserves the order.
      for (const auto& t : k.terms()) row.emplace_back(col.at(t.monomial * mu), t.coeff);
      M.rows.push_back(std::move(row));
      M.labels.push_back({g, mu});
    }
  }
  if (M.rows.empty()) throw EmptyMatrixError("degree " + std::to_string(d) + " is below every generator degree");
  return M;
}

inline MacaulayMatrix build_macaulay(const GeneratorSet& gens, const ProblemShape& shape, int d) {
  MacaulayMatrix M = build_macaulay(gens.all(), d);
  if (M.rows.size() > macaulay_row_bound(shape, d))
    throw ConsistencyError("Macaulay matrix exceeds its row bound");
  return M;
}

/// Reduced row echelon form: each row is eliminated against earlier pivots until its leading
/// column is free, in a dense uint64 scratch with lazy reduction; a back-substitution pass
/// then clears the remaining pivot columns. Rows are returned sorted by pivot column.
inline MacaulayMatrix row_echelon(const MacaulayMatrix& in) {
  const PrimeField& F = in.ring->field;
  const std::uint64_t p = F.modulus();
  const std::size_t ncols = in.columns.size();
  std::vector<std::int64_t> pivot_of(ncols, -1);
  std::vector<SparseRow> piv_rows;
  std::vector<std::uint64_t> scratch(ncols, 0);
  std::size_t zero_rows = 0;
  // Each update adds less than 2^32, far below uint64 headroom for any realistic row count.
  for (const auto& row : in.rows) {
    if (row.empty()) {
      ++zero_rows;
      continue;
    }
    std::uint32_t lo = row.front().first;
    for (auto [c, v] : row) scratch[c] = v;
    std::uint32_t lead = static_cast<std::uint32_t>(ncols);
    for (std::uint32_t c = lo; c < ncols; ++c) {
      std::uint64_t v = scratch[c] % p;
      scratch[c] = v;
      if (!v) continue;
      std::int64_t pr = pivot_of[c];
      if (pr < 0) {
        lead = c;
        break;
      }
      std::uint64_t f = p - v;
      for (auto [k, pv] : piv_rows[static_cast<std::size_t>(pr)]) scratch[k] += f * pv;
      scratch[c] = 0;
    }
    if (lead == ncols) {
      ++zero_rows;
      continue;
    }
    Coeff inv = F.inv(static_cast<Coeff>(scratch[lead] % p));
    SparseRow out;
    for (std::uint32_t c = lead; c < ncols; ++c) {
      std::uint64_t v = scratch[c] % p;
      scratch[c] = 0;
      if (v) out.emplace_back(c, F.mul(static_cast<Coeff>(v), inv));
    }
    pivot_of[lead] = static_cast<std::int64_t>(piv_rows.size());
    piv_rows.push_back(std::move(out));
  }

  // Back-substitution from the smallest monomial upward.
  std::vector<std::uint32_t> order;
  for (std::uint32_t c = 0; c < ncols; ++c)
    if (pivot_of[c] >= 0) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    SparseRow& row = piv_rows[static_cast<std::size_t>(pivot_of[*it])];
    bool touched = false;
    for (std::size_t i = 1; i < row.size(); ++i)
      if (pivot_of[row[i].first] >= 0) touched = true;
    if (!touched) continue;
    for (auto [c, v] : row) scratch[c] = v;
    for (std::uint32_t c = *it + 1; c < ncols; ++c) {
      std::uint64_t v = scratch[c] % p;
      scratch[c] = v;
      if (!v || pivot_of[c] < 0) continue;
      std::uint64_t f = p - v;
      for (auto [k, pv] : piv_rows[static_cast<std::size_t>(pivot_of[c])]) scratch[k] += f * pv;
      scratch[c] = 0;
    }
    SparseRow out;
    for (std::uint32_t c = *it; c < ncols; ++c) {
      std::uint64_t v = scratch[c] % p;
      scratch[c] = 0;
      if (v) out.emplace_back(c, static_cast<Coeff>(v));
    }
    row = std::move(out);
  }

  MacaulayMatrix R;
  R.ring = in.ring;
  R.degree = in.degree;
  R.columns = in.columns;
  R.zero_rows = zero_rows;
  R.reduced = true;
  for (std::uint32_t c : order) R.rows.push_back(std::move(piv_rows[static_cast<std::size_t>(pivot_of[c])]));
  return R;
}

/// Groebner basis read off a reduced Macaulay matrix. `gens` are the original generators; the
/// candidate must satisfy the Buchberger criterion and reduce every generator to zero,
/// otherwise InsufficientDegree is raised.
inline GroebnerBasis extract_basis(const MacaulayMatrix& M, const std::vector<Polynomial>& gens) {
  if (!M.reduced) throw UndefinedInput("extract_basis needs a reduced matrix");
  // Rows come sorted by pivot column, i.e. by decreasing leading monomial; scan from the
  // smallest so that divisors are kept first.
  std::vector<Polynomial> kept;
  std::vector<Monomial> lms;
  for (std::size_t r = M.rows.size(); r-- > 0;) {
    const Monomial& lm = M.columns[M.rows[r].front().first];
    if (!is_standard(lm, lms)) continue;
    lms.push_back(lm);
    kept.push_back(M.row_polynomial(r));
  }
  if (kept.empty()) throw InsufficientDegree("no rows survived the reduction", -1, -1);
  GroebnerBasis gb = interreduce(M.ring, std::move(kept));
  if (auto bad = buchberger_criterion_failure(gb.polys))
    throw InsufficientDegree("S-polynomial of basis elements " + std::to_string(bad->first) + " and " +
                                 std::to_string(bad->second) + " does not reduce to zero at degree " +
                                 std::to_string(M.degree),
                             bad->first, bad->second);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!normal_form(gens[i], gb).is_zero())
      throw InsufficientDegree("generator " + std::to_string(i) + " is not reduced to zero at degree " +
                                   std::to_string(M.degree),
                               -1, static_cast<int>(i));
  return gb;
}

/// Build, reduce and extract at one degree.
inline GroebnerBasis basis_at_degree(const std::vector<Polynomial>& gens, int d) {
  return extract_basis(row_echelon(build_macaulay(gens, d)), gens);
}

struct MacaulaySolution {
  GroebnerBasis basis;
  int degree = 0;    // first degree >= the witness bound at which extraction succeeded
  int attempts = 0;
};

/// Grevlex basis of the critical ideal: try d = witness_degree_bound, then up to n more.
inline MacaulaySolution solve(const CriticalSystem& sys) {
  sys.validate();
  auto gens = critical_generators(sys).all();
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  if (gens.empty()) throw PositiveDimension("every generator vanishes");
  int bound = witness_degree_bound(sys.shape);
  MacaulaySolution sol;
  for (int d = bound; d <= bound + sys.shape.n; ++d) {
    ++sol.attempts;
    try {
      MacaulayMatrix M = build_macaulay(gens, d);
      if (M.rows.size() > macaulay_row_bound(sys.shape, d)) throw ConsistencyError("Macaulay matrix exceeds its row bound");
      sol.basis = extract_basis(row_echelon(M), gens);
      sol.degree = d;
      if (!is_zero_dimensional(sol.basis)) throw PositiveDimension("critical ideal is not zero-dimensional");
      return sol;
    } catch (const InsufficientDegree&) {
    } catch (const EmptyMatrixError&) {
    }
  }
  throw GenericityFailure("no Groebner basis up to degree " + std::to_string(bound + sys.shape.n) + " for " +
                          sys.shape.to_string());
}

/// Smallest degree, scanning upward from the largest generator degree, at which the
/// Macaulay matrix yields a Groebner basis.
inline int dwit_empirical(const CriticalSystem& sys) {
  sys.validate();
  auto gens = critical_generators(sys).all();
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  if (gens.empty()) throw PositiveDimension("every generator vanishes");
  int start = 0;
  for (const auto& g : gens) start = std::max(start, g.degree());
  int limit = witness_degree_bound(sys.shape) + sys.shape.n;
  for (int d = start; d <= limit; ++d) {
    try {
      basis_at_degree(gens, d);
      return d;
    } catch (const InsufficientDegree&) {
    }
  }
  throw GenericityFailure("no Groebner basis up to degree " + std::to_string(limit) + " for " + sys.shape.to_string());
}

}  // namespace critpt

#endif  // CRITPT_MACAULAY_HPP
