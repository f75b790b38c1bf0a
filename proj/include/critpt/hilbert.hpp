#ifndef CRITPT_HILBERT_HPP
#define CRITPT_HILBERT_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "critpt/critical_system.hpp"
#include "critpt/series.hpp"

namespace critpt {

/// All vectors of `parts` non-negative integers summing to `total`, lexicographically decreasing.
inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  if (total >= 0) rec(0, total);
  return out;
}

/// Default truncation order for series expansions: dwit_bound + n + 2.
int default_truncation(const ProblemShape& shape);

/// Weighted Hilbert series of Q[U]/D, D the maximal minors of the (p+1) x n matrix
/// of U_{i,j} with weight d_i - 1:
///   numerator   1 - sum_{k=0}^{n-p-1} (-1)^k sum_{|i|=k} C(n,p+k+1) t^{sum_j (i_j+1)(d_j-1)}
///   denominator prod_i (1 - t^{d_i-1})^n
/// When d0 = 1 the denominator carries a (1 - t^0) factor and the series cannot be expanded
/// on its own; hs_critical cancels it.
inline RationalSeries hs_determinantal(const ProblemShape& shape) {
  shape.validate();
  const int n = shape.n, p = shape.p;
  IntPolynomial1V num{1};
  for (int k = 0; k <= n - p - 1; ++k) {
    std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    auto mult = static_cast<std::int64_t>(binomial(n, p + k + 1));
    for (const auto& comp : compositions(k, p + 1)) {
      int e = 0;
      for (int j = 0; j <= p; ++j) e += (comp[j] + 1) * (shape.d(j) - 1);
      num.add_term(e, -sign * mult);
    }
  }
  std::map<int, int> den;
  for (int d : shape.degrees) den[d - 1] += n;
  return RationalSeries(std::move(num), std::move(den), default_truncation(shape));
}

/// Hilbert series of Q[X]/Icrit(q^inf, F^inf) for a generic system:
///   wHS_D(t) (1-t^{d0-1})^n prod_{i>=1} (1-t^{d_i})(1-t^{d_i-1})^n / (1-t)^n.
/// The result is a polynomial; if the division is not exact (or the degree escapes
/// 4 n max d_i) NonPolynomialSeries is raised.
inline IntPolynomial1V hs_critical(const ProblemShape& shape) {
  RationalSeries r = hs_determinantal(shape).over_factor(1, shape.n);
  r = r.times_factor(shape.d(0) - 1, shape.n);
  for (int i = 1; i <= shape.p; ++i) r = r.times_factor(shape.d(i), 1).times_factor(shape.d(i) - 1, shape.n);
  IntPolynomial1V hs = r.as_polynomial();
  if (hs.degree() >= 4 * shape.n * shape.max_degree())
    throw NonPolynomialSeries("Hilbert series expansion did not terminate for " + shape.to_string());
  return hs;
}

/// (n-p-1) max_i(d_i-1) - n - p + d0 + 2 sum_{i>=1} d_i
inline int degree_of_regularity(const ProblemShape& shape) {
  shape.validate();
  int sum = 0;
  for (int i = 1; i <= shape.p; ++i) sum += shape.d(i);
  return (shape.n - shape.p - 1) * shape.max_reduced_degree() - shape.n - shape.p + shape.d(0) + 2 * sum;
}

/// Upper bound on the witness degree of a generic system; equals the degree of regularity.
inline int witness_degree_bound(const ProblemShape& shape) { return degree_of_regularity(shape); }

inline int default_truncation(const ProblemShape& shape) { return witness_degree_bound(shape) + shape.n + 2; }

/// Number of complex critical points of a generic instance:
///   (prod_{i>=1} d_i) * sum_{i0+...+ip = n-p} prod_j (d_j - 1)^{i_j}
inline std::int64_t algebraic_degree(const ProblemShape& shape) {
  shape.validate();
  std::int64_t prod = 1;
  for (int i = 1; i <= shape.p; ++i) prod *= shape.d(i);
  std::int64_t sum = 0;
  for (const auto& comp : compositions(shape.n - shape.p, shape.p + 1)) {
    std::int64_t term = 1;
    for (int j = 0; j <= shape.p; ++j)
      for (int r = 0; r < comp[j]; ++r) term *= shape.d(j) - 1;
    sum += term;
  }
  return prod * sum;
}

/// Hilbert series of the homogenized critical ideal in X1..Xn,H: hs_critical / (1 - t).
/// Its coefficients become constant, equal to the algebraic degree.
inline RationalSeries hs_homogenized(const ProblemShape& shape) {
  return RationalSeries(hs_critical(shape), {{1, 1}}, default_truncation(shape));
}

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Complexity predictors for one shape. A and G are the arithmetic and geometric means of
/// the multiset {d1, ..., dp, m, ..., m} with m = max_i(d_i - 1) repeated n - p times.
/// G is kept exactly as the n-th root of `g_radicand`.
struct ComplexityProfile {
  ProblemShape shape;
  std::vector<int> multiset;
  Rational A;
  std::int64_t g_radicand = 1;
  int g_root = 1;
  double G = 1.0;
  std::int64_t delta = 0;
  int dreg = 0;
  int dwit_bound = 0;

  double log_a_over_log_g() const { return std::log(A.value()) / std::log(G); }
  std::string g_exact() const { return std::to_string(g_radicand) + "^(1/" + std::to_string(g_root) + ")"; }
};

inline ComplexityProfile averages(const ProblemShape& shape) {
  shape.validate();
  ComplexityProfile prof;
  prof.shape = shape;
  for (int i = 1; i <= shape.p; ++i) prof.multiset.push_back(shape.d(i));
  for (int i = 0; i < shape.n - shape.p; ++i) prof.multiset.push_back(shape.max_reduced_degree());
  std::int64_t sum = 0, prod = 1;
  for (int v : prof.multiset) {
    sum += v;
    prod *= v;
  }
  prof.A = Rational::make(sum, shape.n);
  prof.g_radicand = prod;
  prof.g_root = shape.n;
  prof.G = std::pow(static_cast<double>(prod), 1.0 / shape.n);
  prof.delta = algebraic_degree(shape);
  prof.dreg = degree_of_regularity(shape);
  prof.dwit_bound = witness_degree_bound(shape);
  return prof;
}

}  // namespace critpt

#endif  // CRITPT_HILBERT_HPP
