#ifndef CRITPT_GROTHENDIECK_HPP
#define CRITPT_GROTHENDIECK_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "critpt/critical_system.hpp"
#include "critpt/series.hpp"

namespace critpt {

/// Bijection of {1..m} in one-line notation.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : w_(std::move(images)) {
    std::vector<int> s = w_;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i) + 1) throw UndefinedInput("not a permutation of {1..m}");
  }
  static Permutation identity(int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }
  /// w0(i) = m + 1 - i
  static Permutation longest(int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) w[i] = m - i;
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(w_.size()); }
  /// 1-based.
  int operator()(int i) const { return w_.at(static_cast<std::size_t>(i) - 1); }
  const std::vector<int>& images() const { return w_; }

  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::size_t j = i + 1; j < w_.size(); ++j)
        if (w_[i] > w_[j]) ++inv;
    return inv;
  }

  /// w . s_i, with the product acting on values: (w . s_i)(j) = s_i(w(j)).
  /// In one-line notation this exchanges the entries i and i+1.
  Permutation times_transposition(int i) const {
    if (i < 1 || i >= size()) throw DimensionError("transposition index out of range");
    Permutation r = *this;
    for (int& v : r.w_) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
    }
    return r;
  }

  /// Indices i with length(w . s_i) > length(w): the entry i stands left of i+1.
  std::vector<int> ascents() const {
    std::vector<int> pos(w_.size() + 1);
    for (std::size_t k = 0; k < w_.size(); ++k) pos[static_cast<std::size_t>(w_[k])] = static_cast<int>(k);
    std::vector<int> out;
    for (int i = 1; i < size(); ++i)
      if (pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(i) + 1]) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
    return s + ")";
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> w_;
};

/// Integer polynomial in t_1..t_m.
class IntPolynomialMV {
public:
  using Exps = std::vector<int>;

  IntPolynomialMV() = default;
  explicit IntPolynomialMV(int nvars) : nvars_(nvars) {}

  static IntPolynomialMV constant(int nvars, std::int64_t c) {
    IntPolynomialMV r(nvars);
    if (c) r.terms_[Exps(static_cast<std::size_t>(nvars), 0)] = c;
    return r;
  }
  /// t_i, 1-based.
  static IntPolynomialMV variable(int nvars, int i) {
    IntPolynomialMV r(nvars);
    Exps e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(i) - 1) = 1;
    r.terms_[e] = 1;
    return r;
  }

  int nvars() const { return nvars_; }
  const std::map<Exps, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& e, std::int64_t c) {
    if (c == 0) return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  friend IntPolynomialMV operator+(IntPolynomialMV a, const IntPolynomialMV& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend IntPolynomialMV operator-(IntPolynomialMV a, const IntPolynomialMV& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  IntPolynomialMV operator-() const {
    IntPolynomialMV r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend IntPolynomialMV operator*(const IntPolynomialMV& a, const IntPolynomialMV& b) {
    IntPolynomialMV r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e = ea;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  /// Multiply by t_i (1-based).
  IntPolynomialMV times_variable(int i) const {
    IntPolynomialMV r(nvars_);
    for (const auto& [key, c] : terms_) {
      Exps e = key;
      ++e.at(static_cast<std::size_t>(i) - 1);
      r.terms_.emplace(std::move(e), c);
    }
    return r;
  }

  /// Exchange t_i and t_{i+1}.
  IntPolynomialMV swapped(int i) const {
    IntPolynomialMV r(nvars_);
    for (const auto& [key, c] : terms_) {
      Exps e = key;
      std::swap(e.at(static_cast<std::size_t>(i) - 1), e.at(static_cast<std::size_t>(i)));
      r.terms_.emplace(std::move(e), c);
    }
    return r;
  }

  /// Highest index j with a nonzero exponent of t_j in some term (0 if constant).
  int support_bound() const {
    int m = 0;
    for (const auto& [e, c] : terms_)
      for (int k = 0; k < nvars_; ++k)
        if (e[k]) m = std::max(m, k + 1);
    return m;
  }

  friend bool operator==(const IntPolynomialMV&, const IntPolynomialMV&) = default;

  std::string to_string(const std::string& var = "t") const {
    if (terms_.empty()) return "0";
    // Print by decreasing total degree, then decreasing exponent vector.
    std::vector<std::pair<Exps, std::int64_t>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      int da = std::accumulate(a.first.begin(), a.first.end(), 0);
      int db = std::accumulate(b.first.begin(), b.first.end(), 0);
      if (da != db) return da > db;
      return a.first > b.first;
    });
    std::string s;
    for (const auto& [e, c] : v) {
      if (!s.empty()) s += c < 0 ? "-" : "+";
      else if (c < 0) s += "-";
      std::int64_t a = c < 0 ? -c : c;
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k]) continue;
        if (!mono.empty()) mono += "*";
        mono += var + std::to_string(k + 1);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) s += std::to_string(a);
      else s += (a != 1 ? std::to_string(a) + "*" : "") + mono;
    }
    return s;
  }

private:
  int nvars_ = 0;
  std::map<Exps, std::int64_t> terms_;
};

/// (H - H(t_i <-> t_{i+1})) / (t_i - t_{i+1}). The division is carried out by peeling
/// off the highest power of t_i; a leftover free of t_i means it was not exact.
inline IntPolynomialMV divided_difference(const IntPolynomialMV& h, int i) {
  if (i < 1 || i >= h.nvars()) throw DimensionError("divided difference index out of range");
  const std::size_t a = static_cast<std::size_t>(i) - 1, b = static_cast<std::size_t>(i);
  IntPolynomialMV rem = h - h.swapped(i);
  IntPolynomialMV quot(h.nvars());
  while (!rem.is_zero()) {
    int top = -1;
    for (const auto& [e, c] : rem.terms()) top = std::max(top, e[a]);
    if (top == 0) throw ConsistencyError("divided difference numerator is not divisible by t_i - t_{i+1}");
    std::vector<std::pair<IntPolynomialMV::Exps, std::int64_t>> lead;
    for (const auto& [e, c] : rem.terms())
      if (e[a] == top) lead.emplace_back(e, c);
    for (auto [e, c] : lead) {
      // rem -= (c t^e / t_i) (t_i - t_{i+1})
      --e[a];
      quot.add_term(e, c);
      auto up = e;
      ++up[a];
      rem.add_term(up, -c);
      auto side = e;
      ++side[b];
      rem.add_term(side, c);
    }
  }
  return quot;
}

inline constexpr int kMaxGrothendieckVars = 8;

/// Grothendieck polynomials of S_m from the top: G_{w0} = prod_i (1 - t_i)^{m-i},
/// G_{w sigma_i} = -d_i(t_{i+1} G_w) when w sigma_i is shorter than w. Memoized per table.
class GrothendieckTable {
public:
  explicit GrothendieckTable(int m) : m_(m) {
    if (m < 1) throw DimensionError("permutation size must be positive");
    if (m > kMaxGrothendieckVars) throw SizeGuardError("Grothendieck polynomials limited to S_8");
  }

  int size() const { return m_; }

  IntPolynomialMV top() const {
    IntPolynomialMV g = IntPolynomialMV::constant(m_, 1);
    for (int i = 1; i <= m_; ++i) {
      IntPolynomialMV f = IntPolynomialMV::constant(m_, 1) - IntPolynomialMV::variable(m_, i);
      for (int k = 0; k < m_ - i; ++k) g = g * f;
    }
    return g;
  }

  /// One step of the recursion: G_v from G_{v sigma_i}, where i is an ascent of v.
  IntPolynomialMV step(const Permutation& v, int i) {
    auto asc = v.ascents();
    if (std::find(asc.begin(), asc.end(), i) == asc.end()) throw UndefinedInput("step requires an ascent");
    return -divided_difference(get(v.times_transposition(i)).times_variable(i + 1), i);
  }

  /// Descends along the smallest ascent.
  const IntPolynomialMV& get(const Permutation& w) {
    if (w.size() != m_) throw DimensionError("permutation size differs from table size");
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    IntPolynomialMV g;
    auto asc = w.ascents();
    if (asc.empty())
      g = top();
    else
      g = step(w, asc.front());
    return memo_.emplace(w, std::move(g)).first->second;
  }

private:
  int m_;
  std::map<Permutation, IntPolynomialMV> memo_;
};

inline IntPolynomialMV grothendieck_poly(const Permutation& w) {
  GrothendieckTable table(w.size());
  return table.get(w);
}

/// w(i) = i for i <= p, w(i) = i+1 for p < i <= n, w(n+1) = p+1.
inline Permutation determinantal_permutation(const ProblemShape& shape) {
  shape.validate();
  std::vector<int> w;
  for (int i = 1; i <= shape.p; ++i) w.push_back(i);
  for (int i = shape.p + 1; i <= shape.n; ++i) w.push_back(i + 1);
  w.push_back(shape.p + 1);
  return Permutation(std::move(w));
}

/// Substitute t_j -> t^{e_j}; variables beyond `exponents` must not occur.
inline IntPolynomial1V evaluate_at_powers(const IntPolynomialMV& g, const std::vector<int>& exponents) {
  IntPolynomial1V out;
  for (const auto& [e, c] : g.terms()) {
    int deg = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (k >= exponents.size()) throw ConsistencyError("Grothendieck polynomial involves an unexpected variable");
      deg += e[k] * exponents[k];
    }
    out.add_term(deg, c);
  }
  return out;
}

/// K-polynomial of the weighted determinantal ideal: G_w at t_j = t^{d_{j-1} - 1}.
inline IntPolynomial1V evaluate_kpoly(const ProblemShape& shape) {
  Permutation w = determinantal_permutation(shape);
  IntPolynomialMV g = grothendieck_poly(w);
  std::vector<int> ex;
  for (int d : shape.degrees) ex.push_back(d - 1);
  return evaluate_at_powers(g, ex);
}

}  // namespace critpt

#endif  // CRITPT_GROTHENDIECK_HPP
