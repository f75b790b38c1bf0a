#ifndef CRITPT_EAGON_NORTHCOTT_HPP
#define CRITPT_EAGON_NORTHCOTT_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "critpt/critical_system.hpp"
#include "critpt/hilbert.hpp"
#include "critpt/series.hpp"

namespace critpt {

inline constexpr int kMaxEagonNorthcottN = 7;

/// Free generator e_S (x) m* of stage k: S a (p+k)-subset of the n columns, m an exponent
/// vector of degree k-1 on the p+1 rows (a basis element of (Sym_{k-1} G)*).
struct EnGenerator {
  std::vector<int> columns;
  std::vector<int> sym;
  int shift = 0;
};

struct GradedFreeModule {
  std::vector<int> shifts;
  std::size_t rank() const { return shifts.size(); }
};

/// Eagon-Northcott complex of the generic (p+1) x n matrix over Q[U], U_{i,j} of weight d_i - 1.
/// Stage 0 is R, stage k >= 1 is (Sym_{k-1} G)* (x) wedge^{p+k} F; differentials[k] is the
/// rank(k-1) x rank(k) matrix of sigma_k (differentials[0] is empty).
struct GradedComplex {
  ProblemShape shape;
  RingPtr ring;
  std::vector<int> weights;
  std::vector<std::vector<EnGenerator>> bases;
  std::vector<GradedFreeModule> modules;
  std::vector<PolyMatrix> differentials;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& m : modules) r.push_back(m.rank());
    return r;
  }
};

/// Q[U] with U_{i,j} at index i*n + (j-1), named U_i_j.
inline RingPtr en_ring(const ProblemShape& shape, PrimeField field = PrimeField()) {
  std::vector<std::string> names;
  for (int i = 0; i <= shape.p; ++i)
    for (int j = 1; j <= shape.n; ++j) names.push_back("U_" + std::to_string(i) + "_" + std::to_string(j));
  return make_ring(std::move(names), field);
}

/// The (p+1) x n matrix of U variables.
inline PolyMatrix generic_matrix(const ProblemShape& shape, const RingPtr& ring) {
  PolyMatrix m;
  for (int i = 0; i <= shape.p; ++i) {
    std::vector<Polynomial> row;
    for (int j = 0; j < shape.n; ++j)
      row.push_back(Polynomial::variable(ring, static_cast<std::size_t>(i * shape.n + j)));
    m.push_back(std::move(row));
  }
  return m;
}

/// Weighted degrees d_i - 1 of the U variables (zero when d0 = 1).
inline std::vector<int> en_weights(const ProblemShape& shape) {
  std::vector<int> w;
  for (int i = 0; i <= shape.p; ++i)
    for (int j = 0; j < shape.n; ++j) w.push_back(shape.d(i) - 1);
  return w;
}

/// Generators of every stage with their graded shifts; no differentials.
inline std::vector<std::vector<EnGenerator>> en_bases(const ProblemShape& shape) {
  shape.validate();
  const int n = shape.n, p = shape.p;
  const int s = shape.minor_degree();
  std::vector<std::vector<EnGenerator>> bases;
  bases.push_back({EnGenerator{{}, std::vector<int>(static_cast<std::size_t>(p) + 1, 0), 0}});
  for (int k = 1; k <= n - p; ++k) {
    std::vector<EnGenerator> stage;
    for (const auto& cols : subsets(n, p + k))
      for (const auto& sym : compositions(k - 1, p + 1)) {
        int shift = s;
        for (int j = 0; j <= p; ++j) shift += sym[j] * (shape.d(j) - 1);
        stage.push_back({cols, sym, shift});
      }
    bases.push_back(std::move(stage));
  }
  return bases;
}

namespace detail {

/// Determinant by the permutation-sum formula; independent of the Laplace routine used
/// for Jacobian minors so the two can check each other.
inline Polynomial leibniz_det(const PolyMatrix& m, const std::vector<int>& cols) {
  const RingPtr& ring = m[0][0].ring();
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial acc(ring);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    Polynomial term = Polynomial::constant(ring, 1);
    for (std::size_t r = 0; r < perm.size(); ++r) term = term * m[r][static_cast<std::size_t>(cols[static_cast<std::size_t>(perm[r])])];
    acc = inversions % 2 ? acc - term : acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

inline int weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += m[i] * weights[i];
  return d;
}

}  // namespace detail

/// Differentials: sigma_1 sends e_S to the minor on columns S; for k >= 2
///   e_S (x) m*  |->  sum_{j in S} (-1)^{pos(j,S)} sum_{i : m_i > 0} U_{i,j} e_{S\j} (x) (m - e_i)*.
inline GradedComplex build_complex(const ProblemShape& shape, PrimeField field = PrimeField()) {
  shape.validate();
  if (shape.n > kMaxEagonNorthcottN) throw SizeGuardError("Eagon-Northcott construction limited to n <= 7");
  GradedComplex c;
  c.shape = shape;
  c.ring = en_ring(shape, field);
  c.weights = en_weights(shape);
  c.bases = en_bases(shape);
  for (const auto& b : c.bases) {
    GradedFreeModule mod;
    for (const auto& g : b) mod.shifts.push_back(g.shift);
    c.modules.push_back(std::move(mod));
  }
  const PolyMatrix u = generic_matrix(shape, c.ring);
  const int n = shape.n, p = shape.p;

  c.differentials.emplace_back();
  {
    PolyMatrix sigma1(1);
    for (const auto& g : c.bases[1]) sigma1[0].push_back(detail::leibniz_det(u, g.columns));
    c.differentials.push_back(std::move(sigma1));
  }
  for (int k = 2; k <= n - p; ++k) {
    const auto& src = c.bases[static_cast<std::size_t>(k)];
    const auto& dst = c.bases[static_cast<std::size_t>(k) - 1];
    PolyMatrix sigma(dst.size(), std::vector<Polynomial>(src.size(), Polynomial(c.ring)));
    auto find_row = [&](const std::vector<int>& cols, const std::vector<int>& sym) {
      for (std::size_t r = 0; r < dst.size(); ++r)
        if (dst[r].columns == cols && dst[r].sym == sym) return r;
      throw ConsistencyError("Eagon-Northcott basis lookup failed");
    };
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& g = src[col];
      for (std::size_t pos = 0; pos < g.columns.size(); ++pos) {
        int j = g.columns[pos];
        std::vector<int> rest = g.columns;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        for (int i = 0; i <= p; ++i) {
          if (g.sym[static_cast<std::size_t>(i)] == 0) continue;
          std::vector<int> lowered = g.sym;
          --lowered[static_cast<std::size_t>(i)];
          std::size_t row = find_row(rest, lowered);
          const Polynomial& entry = u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          sigma[row][col] = pos % 2 ? sigma[row][col] - entry : sigma[row][col] + entry;
        }
      }
    }
    c.differentials.push_back(std::move(sigma));
  }
  return c;
}

inline PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw DimensionError("matrix product shape mismatch");
  PolyMatrix r(a.size(), std::vector<Polynomial>(b[0].size(), Polynomial(ring)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t m = 0; m < b.size(); ++m) {
      if (a[i][m].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        if (!b[m][j].is_zero()) r[i][j] += a[i][m] * b[m][j];
    }
  return r;
}

struct ComplexReport {
  std::vector<std::size_t> ranks;
  std::size_t composites_checked = 0;
  std::size_t entries_checked = 0;
  bool stage_one_matches_minors = false;

  std::string to_string() const {
    std::string s = "ranks";
    for (auto r : ranks) s += " " + std::to_string(r);
    s += "\ncomposites_zero " + std::to_string(composites_checked);
    s += "\nhomogeneous_entries " + std::to_string(entries_checked);
    s += std::string("\nstage1_equals_minors ") + (stage_one_matches_minors ? "yes" : "no");
    return s;
  }
};

/// Checks sigma_{k-1} sigma_k = 0, weighted homogeneity of every entry, and that sigma_1 lists
/// the maximal minors of the U matrix. Any failure raises ConsistencyError naming the entry.
inline ComplexReport verify_complex(const GradedComplex& c) {
  ComplexReport rep;
  rep.ranks = c.ranks();
  const int len = c.length();
  for (int k = 1; k <= len; ++k) {
    const auto& sigma = c.differentials[static_cast<std::size_t>(k)];
    if (sigma.size() != c.modules[static_cast<std::size_t>(k) - 1].rank() ||
        (!sigma.empty() && sigma[0].size() != c.modules[static_cast<std::size_t>(k)].rank()))
      throw ConsistencyError("differential " + std::to_string(k) + " has the wrong dimensions");
    for (std::size_t r = 0; r < sigma.size(); ++r)
      for (std::size_t col = 0; col < sigma[r].size(); ++col) {
        const Polynomial& e = sigma[r][col];
        int want = c.modules[static_cast<std::size_t>(k)].shifts[col] - c.modules[static_cast<std::size_t>(k) - 1].shifts[r];
        for (const auto& t : e.terms())
          if (detail::weighted_degree(t.monomial, c.weights) != want)
            throw ConsistencyError("sigma_" + std::to_string(k) + " entry (" + std::to_string(r) + "," +
                                   std::to_string(col) + ") = " + e.to_string() + " is not of degree " +
                                   std::to_string(want));
        ++rep.entries_checked;
      }
  }
  for (int k = 2; k <= len; ++k) {
    PolyMatrix comp = multiply(c.differentials[static_cast<std::size_t>(k) - 1], c.differentials[static_cast<std::size_t>(k)], c.ring);
    for (std::size_t r = 0; r < comp.size(); ++r)
      for (std::size_t col = 0; col < comp[r].size(); ++col)
        if (!comp[r][col].is_zero())
          throw ConsistencyError("sigma_" + std::to_string(k - 1) + " * sigma_" + std::to_string(k) + " entry (" +
                                 std::to_string(r) + "," + std::to_string(col) + ") = " + comp[r][col].to_string());
    ++rep.composites_checked;
  }
  auto minors = maximal_minors(generic_matrix(c.shape, c.ring), c.shape.p + 1);
  if (len >= 1) {
    const auto& row = c.differentials[1][0];
    if (row.size() != minors.size()) throw ConsistencyError("stage 1 rank differs from the minor count");
    for (std::size_t i = 0; i < minors.size(); ++i)
      if (!(row[i] == minors[i]))
        throw ConsistencyError("sigma_1 entry " + std::to_string(i) + " = " + row[i].to_string() +
                               " differs from minor " + minors[i].to_string());
  }
  rep.stage_one_matches_minors = true;
  return rep;
}

/// Alternating sum of the free modules' shifts: sum_k (-1)^k sum_{g in stage k} t^{shift(g)}.
inline IntPolynomial1V alternating_numerator(const ProblemShape& shape) {
  IntPolynomial1V num;
  auto bases = en_bases(shape);
  for (std::size_t k = 0; k < bases.size(); ++k)
    for (const auto& g : bases[k]) num.add_term(g.shift, k % 2 ? -1 : 1);
  return num;
}

/// C(n, p+k) C(p+k-1, k-1) for k >= 1, 1 for k = 0.
inline std::uint64_t en_rank_formula(const ProblemShape& shape, int k) {
  if (k == 0) return 1;
  return binomial(shape.n, shape.p + k) * binomial(shape.p + k - 1, k - 1);
}

}  // namespace critpt

#endif  // CRITPT_EAGON_NORTHCOTT_HPP
