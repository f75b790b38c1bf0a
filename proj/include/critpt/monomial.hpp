#ifndef CRITPT_MONOMIAL_HPP
#define CRITPT_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "critpt/errors.hpp"

namespace critpt {

inline constexpr std::size_t kMaxVars = 64;
using Exponent = std::uint8_t;

/// Positive integer weight per variable.
class Grading {
public:
  Grading() = default;
  explicit Grading(std::vector<int> weights) : weights_(std::move(weights)) {
    if (weights_.size() > kMaxVars) throw SizeGuardError("too many variables");
    for (int w : weights_)
      if (w < 1) throw UndefinedInput("grading weights must be >= 1");
  }
  static Grading canonical(std::size_t nvars) { return Grading(std::vector<int>(nvars, 1)); }

  std::size_t size() const { return weights_.size(); }
  int operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  bool is_canonical() const {
    return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
  }

  friend bool operator==(const Grading&, const Grading&) = default;

private:
  std::vector<int> weights_;
};

/// Dense exponent vector with its weighted degree cached at construction.
class Monomial {
public:
  Monomial() = default;

  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw SizeGuardError("too many variables");
  }

  Monomial(std::span<const int> exponents, const Grading& grading)
    : nvars_(static_cast<std::uint8_t>(exponents.size())) {
    if (exponents.size() > kMaxVars) throw SizeGuardError("too many variables");
    if (grading.size() != exponents.size())
      throw DimensionError("grading and exponent vector have different lengths");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0 || exponents[i] > 255)
        throw UndefinedInput("exponent out of range [0, 255]");
      exp_[i] = static_cast<Exponent>(exponents[i]);
      degree_ += grading[i] * exponents[i];
    }
  }

  Monomial(std::initializer_list<int> exponents, const Grading& grading)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size()), grading) {}

  static Monomial variable(std::size_t index, const Grading& grading) {
    std::vector<int> e(grading.size(), 0);
    e.at(index) = 1;
    return Monomial(e, grading);
  }

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  int total_degree() const {
    int s = 0;
    for (std::size_t i = 0; i < nvars_; ++i) s += exp_[i];
    return s;
  }
  bool is_one() const { return degree_ == 0 && total_degree() == 0; }

  std::vector<int> exponents() const { return std::vector<int>(exp_.begin(), exp_.begin() + nvars_); }

  /// Recompute the weighted degree from scratch (used to audit the cache).
  int recompute_degree(const Grading& grading) const {
    int d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += grading[i] * exp_[i];
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] && other.exp_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      unsigned s = unsigned{a.exp_[i]} + b.exp_[i];
      if (s > 255) throw UndefinedInput("exponent overflow");
      r.exp_[i] = static_cast<Exponent>(s);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    if (!b.divides(a)) throw UndefinedInput("monomial division is not exact");
    Monomial r = a;
    for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = static_cast<Exponent>(a.exp_[i] - b.exp_[i]);
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b, const Grading& grading) {
    check_same(a, b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ = r.recompute_degree(grading);
    return r;
  }

  /// Multiply by one variable.
  Monomial times_variable(std::size_t index, int weight) const {
    Monomial r = *this;
    if (r.exp_[index] == 255) throw UndefinedInput("exponent overflow");
    ++r.exp_[index];
    r.degree_ += weight;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  /// Exponent-vector lexicographic comparison; only for use as a container key.
  struct KeyLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.exp_ < b.exp_; }
  };
  struct Hash {
    std::size_t operator()(const Monomial& m) const {
      std::size_t h = 1469598103934665603ull;
      for (std::size_t i = 0; i < m.nvars_; ++i) h = (h ^ m.exp_[i]) * 1099511628211ull;
      return h;
    }
  };

  static void check_same(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("monomials have different variable counts");
  }

private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint8_t nvars_ = 0;
  int degree_ = 0;
};

enum class OrderKind { grevlex, lex };

/// grevlex or lex with a variable precedence: precedence[0] is the largest variable.
class MonomialOrder {
public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), precedence_(nvars) {
    std::iota(precedence_.begin(), precedence_.end(), 0);
  }
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
    std::vector<std::size_t> sorted = precedence_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw UndefinedInput("variable precedence is not a permutation");
  }

  static MonomialOrder grevlex(std::size_t nvars) { return {OrderKind::grevlex, nvars}; }
  static MonomialOrder lex(std::size_t nvars) { return {OrderKind::lex, nvars}; }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return precedence_.size(); }
  const std::vector<std::size_t>& precedence() const { return precedence_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars() || a.nvars() != precedence_.size())
      throw DimensionError("monomial order applied to monomials of a different ring");
    if (kind_ == OrderKind::grevlex) {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t k = precedence_.size(); k-- > 0;) {
        std::size_t v = precedence_[k];
        if (a[v] != b[v]) return b[v] <=> a[v];
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t v : precedence_)
      if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::size_t> precedence_;
};

/// All exponent vectors of weighted degree exactly `degree`.
inline std::vector<Monomial> monomials_of_degree(const Grading& grading, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(grading.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == grading.size()) {
      if (left % grading[var] == 0) {
        e[var] = left / grading[var];
        out.emplace_back(e, grading);
      }
      e[var] = 0;
      return;
    }
    for (int k = left / grading[var]; k >= 0; --k) {
      e[var] = k;
      rec(var + 1, left - k * grading[var]);
    }
    e[var] = 0;
  };
  if (grading.size() == 0) {
    if (degree == 0) out.emplace_back(std::size_t{0});
    return out;
  }
  if (degree >= 0) rec(0, degree);
  return out;
}

inline std::vector<Monomial> monomials_up_to_degree(const Grading& grading, int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d) {
    auto part = monomials_of_degree(grading, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace critpt

#endif  // CRITPT_MONOMIAL_HPP
