#ifndef CRITPT_POLYNOMIAL_HPP
#define CRITPT_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "critpt/errors.hpp"
#include "critpt/field.hpp"
#include "critpt/monomial.hpp"

namespace critpt {

/// Coefficient field, grading, term order and variable names of a polynomial ring.
struct Ring {
  PrimeField field;
  Grading grading;
  MonomialOrder order;
  std::vector<std::string> names;

  std::size_t nvars() const { return names.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names, PrimeField field = PrimeField(),
                         OrderKind kind = OrderKind::grevlex,
                         std::optional<Grading> grading = std::nullopt) {
  std::size_t n = names.size();
  if (n > kMaxVars) throw SizeGuardError("too many variables");
  Grading g = grading ? *grading : Grading::canonical(n);
  if (g.size() != n) throw DimensionError("grading length differs from variable count");
  return std::make_shared<const Ring>(Ring{field, std::move(g), MonomialOrder(kind, n), std::move(names)});
}

/// Ring X1..Xn (optionally followed by H), canonical grading.
inline RingPtr make_x_ring(std::size_t n, PrimeField field = PrimeField(),
                           OrderKind kind = OrderKind::grevlex, bool with_h = false) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  if (with_h) names.emplace_back("H");
  return make_ring(std::move(names), field, kind);
}

/// Same variables, grading and field, different order.
inline RingPtr with_order(const RingPtr& ring, OrderKind kind) {
  return std::make_shared<const Ring>(Ring{ring->field, ring->grading, MonomialOrder(kind, ring->nvars()), ring->names});
}

struct Term {
  Monomial monomial;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over GF(p). Terms are kept sorted in decreasing order for
/// the ring's monomial order, with no zero coefficients and no repeats.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Accepts terms in any order, with repeats and zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.monomial.nvars() != ring_->nvars()) throw DimensionError("term has wrong variable count");
    normalize();
  }

  static Polynomial constant(RingPtr ring, Coeff c) {
    Polynomial r(ring);
    c = ring->field.reduce(c);
    if (c) r.terms_.push_back({Monomial(ring->nvars()), c});
    return r;
  }
  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial r(ring);
    r.terms_.push_back({Monomial::variable(index, ring->grading), 1});
    return r;
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1) {
    Polynomial r(ring);
    c = ring->field.reduce(c);
    if (c) r.terms_.push_back({m, c});
    return r;
  }

  /// Adopt terms already sorted decreasingly, distinct and nonzero.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
    Polynomial r(std::move(ring));
    r.terms_ = std::move(terms);
    return r;
  }

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw UndefinedInput("leading monomial of the zero polynomial");
    return terms_.front().monomial;
  }
  Coeff leading_coeff() const {
    if (is_zero()) throw UndefinedInput("leading coefficient of the zero polynomial");
    return terms_.front().coeff;
  }

  /// Maximum weighted degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
  }

  /// Degree if homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const {
    if (is_zero() || !is_homogeneous()) return std::nullopt;
    return terms_.front().monomial.degree();
  }

  Coeff coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return 0;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    const auto& F = a.field();
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, F.mul(s.coeff, t.coeff)});
    return Polynomial(a.ring_, std::move(prod));
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scalar_mul(Coeff c) const {
    c = field().reduce(c);
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }

  /// c * m * self. Monomial orders are multiplicative so the term order survives.
  Polynomial mul_term(const Monomial& m, Coeff c) const {
    c = field().reduce(c);
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scalar_mul(field().inv(leading_coeff()));
  }

  /// Homogeneous component of highest weighted degree.
  Polynomial highest_part() const {
    if (is_zero()) throw UndefinedInput("highest part of the zero polynomial");
    int d = degree();
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (t.monomial.degree() == d) r.terms_.push_back(t);
    return r;
  }

  /// Formal partial derivative with respect to variable `var`.
  Polynomial derivative(std::size_t var) const {
    if (var >= ring_->nvars()) throw DimensionError("derivative variable out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
      int e = t.monomial[var];
      if (e == 0) continue;
      Coeff c = field().mul(t.coeff, field().reduce(e));
      if (c == 0) continue;
      auto exps = t.monomial.exponents();
      --exps[var];
      out.push_back({Monomial(exps, ring_->grading), c});
    }
    return Polynomial(ring_, std::move(out));
  }

  Coeff evaluate(const std::vector<Coeff>& point) const {
    if (point.size() != ring_->nvars()) throw DimensionError("evaluation point has wrong length");
    const auto& F = field();
    Coeff acc = 0;
    for (const auto& t : terms_) {
      Coeff v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        if (t.monomial[i]) v = F.mul(v, F.pow(point[i], t.monomial[i]));
      acc = F.add(acc, v);
    }
    return acc;
  }

  /// Re-express in another ring with the same variable count (e.g. a different order).
  Polynomial in_ring(const RingPtr& other) const {
    if (other->nvars() != ring_->nvars()) throw DimensionError("rings have different variable counts");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto e = t.monomial.exponents();
      out.push_back({Monomial(e, other->grading), other->field.reduce(t.coeff)});
    }
    return Polynomial(other, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && *a.ring_ == *b.ring_)) return false;
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

  void check_ring(const Polynomial& b) const {
    if (ring_ == b.ring_) return;
    if (!ring_ || !b.ring_ || ring_->nvars() != b.ring_->nvars() || !(ring_->field == b.ring_->field))
      throw DimensionError("polynomials belong to different rings");
  }

private:
  Polynomial combine(const Polynomial& b, bool subtract) const {
    check_ring(b);
    const auto& F = field();
    const auto& ord = ring_->order;
    std::vector<Term> out;
    out.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        out.push_back(terms_[i++]);
        continue;
      }
      Term bt = b.terms_[j];
      if (subtract) bt.coeff = F.neg(bt.coeff);
      if (i == terms_.size()) {
        out.push_back(bt);
        ++j;
        continue;
      }
      auto c = ord.compare(terms_[i].monomial, bt.monomial);
      if (c > 0) {
        out.push_back(terms_[i++]);
      } else if (c < 0) {
        out.push_back(bt);
        ++j;
      } else {
        Coeff s = F.add(terms_[i].coeff, bt.coeff);
        if (s) out.push_back({terms_[i].monomial, s});
        ++i;
        ++j;
      }
    }
    return from_sorted(ring_, std::move(out));
  }

  void normalize() {
    const auto& F = ring_->field;
    const auto& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      t.coeff = F.reduce(t.coeff);
      if (!out.empty() && out.back().monomial == t.monomial)
        out.back().coeff = F.add(out.back().coeff, t.coeff);
      else
        out.push_back(t);
      if (out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// Terms joined by '+', leading term first; coefficients are residues in [0, p).
inline std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += '+';
    if (t.monomial.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) s += std::to_string(t.coeff) + '*';
      s += monomial_to_string(t.monomial, *ring_);
    }
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

namespace detail {

class PolyParser {
public:
  PolyParser(std::string_view text, RingPtr ring, int line, int column0)
    : text_(text), ring_(std::move(ring)), line_(line), col0_(column0) {}

  Polynomial parse() {
    std::vector<Term> terms;
    const auto& F = ring_->field;
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (negative) t.coeff = F.neg(t.coeff);
      terms.push_back(t);
      first = false;
      skip_ws();
    }
    return Polynomial(ring_, std::move(terms));
  }

private:
  Term parse_term() {
    const auto& F = ring_->field;
    Coeff c = 1;
    std::vector<int> exps(ring_->nvars(), 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = F.mul(c, F.reduce_u64(parse_uint()));
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t var = parse_name();
        skip_ws();
        long e = 1;
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          e = static_cast<long>(parse_uint());
        }
        exps[var] += static_cast<int>(e);
        if (exps[var] > 255) fail("exponent too large");
        any = true;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && (peek() == '+' || peek() == '-')) break;
    }
    if (!any) fail("empty term");
    return {Monomial(exps, ring_->grading), c};
  }

  std::uint64_t parse_uint() {
    std::uint64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > (1ull << 40)) {
        pos_ = start;
        fail("integer literal too large");
      }
      ++pos_;
    }
    return v;
  }

  std::size_t parse_name() {
    std::size_t best = 0, best_len = 0;
    for (std::size_t i = 0; i < ring_->names.size(); ++i) {
      const auto& nm = ring_->names[i];
      if (nm.size() > best_len && text_.substr(pos_, nm.size()) == nm) {
        best = i;
        best_len = nm.size();
      }
    }
    if (best_len == 0) fail("unknown variable");
    pos_ += best_len;
    return best;
  }

  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, col0_ + static_cast<int>(pos_));
  }

  std::string_view text_;
  RingPtr ring_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse `c*X1^a1*...*Xn^an + ...`. `*` may be omitted between factors and `^1` may be
/// dropped; a leading '-' negates modulo p. `line`/`column` locate the text in a file.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, int line = 1, int column = 1) {
  return detail::PolyParser(text, ring, line, column).parse();
}

}  // namespace critpt

#endif  // CRITPT_POLYNOMIAL_HPP
