#ifndef CRITPT_SERIES_HPP
#define CRITPT_SERIES_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "critpt/errors.hpp"

namespace critpt {

/// Integer polynomial in t, coefficient of t^k at index k, no trailing zeros.
class IntPolynomial1V {
public:
  IntPolynomial1V() = default;
  explicit IntPolynomial1V(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial1V(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { trim(); }

  static IntPolynomial1V monomial(int exponent, std::int64_t coeff = 1) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(exponent) + 1, 0);
    c.back() = coeff;
    return IntPolynomial1V(std::move(c));
  }
  /// 1 - t^e
  static IntPolynomial1V one_minus_power(int e) { return IntPolynomial1V{1} - monomial(e); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (auto v : c_) s += v;
    return s;
  }

  void add_term(int exponent, std::int64_t coeff) {
    if (exponent < 0) throw UndefinedInput("negative exponent");
    if (static_cast<int>(c_.size()) <= exponent) c_.resize(static_cast<std::size_t>(exponent) + 1, 0);
    c_[exponent] += coeff;
    trim();
  }

  friend IntPolynomial1V operator+(const IntPolynomial1V& a, const IntPolynomial1V& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial1V(std::move(r));
  }
  friend IntPolynomial1V operator-(const IntPolynomial1V& a, const IntPolynomial1V& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPolynomial1V(std::move(r));
  }
  friend IntPolynomial1V operator*(const IntPolynomial1V& a, const IntPolynomial1V& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial1V(std::move(r));
  }

  /// Exact quotient by (1 - t^e), e >= 1; throws if the division leaves a remainder.
  IntPolynomial1V divide_one_minus_power(int e) const {
    if (e < 1) throw UndefinedInput("division by (1 - t^0)");
    if (is_zero()) return {};
    // q = self / (1 - t^e) as a power series: q_k = c_k + q_{k-e}. Exact iff it terminates
    // at degree deg - e.
    int qdeg = degree() - e;
    if (qdeg < 0) throw NonPolynomialSeries("not divisible by 1 - t^" + std::to_string(e));
    std::vector<std::int64_t> q(static_cast<std::size_t>(qdeg) + 1, 0);
    for (int k = 0; k <= qdeg; ++k) q[k] = (*this)[k] + (k >= e ? q[k - e] : 0);
    IntPolynomial1V quotient(q);
    if (!(quotient * one_minus_power(e) == *this))
      throw NonPolynomialSeries("not divisible by 1 - t^" + std::to_string(e));
    return quotient;
  }

  friend bool operator==(const IntPolynomial1V&, const IntPolynomial1V&) = default;

  /// e.g. "t^5+t^4-3*t^3+1", highest degree first.
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      std::int64_t v = c_[k];
      if (v == 0) continue;
      if (!s.empty()) s += v < 0 ? "-" : "+";
      else if (v < 0) s += "-";
      std::int64_t a = v < 0 ? -v : v;
      if (k == 0) {
        s += std::to_string(a);
        continue;
      }
      if (a != 1) s += std::to_string(a) + "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial1V& f) { return os << f.to_string(); }

/// numerator / prod_e (1 - t^e)^{mult_e}, expanded as a power series up to a truncation order.
class RationalSeries {
public:
  RationalSeries() = default;
  RationalSeries(IntPolynomial1V numerator, std::map<int, int> denominator, int truncation)
    : num_(std::move(numerator)), den_(std::move(denominator)), trunc_(truncation) {
    for (auto it = den_.begin(); it != den_.end();) it = it->second == 0 ? den_.erase(it) : std::next(it);
  }

  const IntPolynomial1V& numerator() const { return num_; }
  /// exponent e -> multiplicity of (1 - t^e)
  const std::map<int, int>& denominator() const { return den_; }
  int truncation() const { return trunc_; }
  void set_truncation(int t) { trunc_ = t; }

  IntPolynomial1V denominator_polynomial() const {
    IntPolynomial1V d{1};
    for (auto [e, m] : den_)
      for (int i = 0; i < m; ++i) d = d * IntPolynomial1V::one_minus_power(e);
    return d;
  }

  /// Multiply by (1 - t^e)^mult, cancelling against the denominator first.
  RationalSeries times_factor(int e, int mult) const {
    RationalSeries r = *this;
    auto it = r.den_.find(e);
    int cancel = it == r.den_.end() ? 0 : std::min(it->second, mult);
    if (cancel) {
      it->second -= cancel;
      if (it->second == 0) r.den_.erase(it);
    }
    for (int i = cancel; i < mult; ++i) r.num_ = r.num_ * IntPolynomial1V::one_minus_power(e);
    return r;
  }

  /// Divide by (1 - t^e)^mult.
  RationalSeries over_factor(int e, int mult) const {
    RationalSeries r = *this;
    if (mult) r.den_[e] += mult;
    return r;
  }

  /// Coefficients of t^0..t^order; each (1 - t^e) factor is a cumulative-sum pass.
  std::vector<std::int64_t> expand(int order) const {
    if (order < 0) return {};
    std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1, 0);
    for (int k = 0; k <= order; ++k) c[k] = num_[k];
    for (auto [e, m] : den_) {
      if (e < 1) throw UndefinedInput("series has a (1 - t^0) denominator factor");
      for (int rep = 0; rep < m; ++rep)
        for (int k = e; k <= order; ++k) c[k] += c[k - e];
    }
    return c;
  }
  std::vector<std::int64_t> expand() const { return expand(trunc_); }

  /// The series as a polynomial when every denominator factor divides the numerator.
  IntPolynomial1V as_polynomial() const {
    IntPolynomial1V q = num_;
    for (auto [e, m] : den_)
      for (int rep = 0; rep < m; ++rep) q = q.divide_one_minus_power(e);
    return q;
  }

private:
  IntPolynomial1V num_;
  std::map<int, int> den_;
  int trunc_ = 0;
};

}  // namespace critpt

#endif  // CRITPT_SERIES_HPP
