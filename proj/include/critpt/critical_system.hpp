#ifndef CRITPT_CRITICAL_SYSTEM_HPP
#define CRITPT_CRITICAL_SYSTEM_HPP

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "critpt/errors.hpp"
#include "critpt/polynomial.hpp"

namespace critpt {

/// n variables, p constraints, degrees (d0, d1, ..., dp).
struct ProblemShape {
  int n = 0;
  int p = 0;
  std::vector<int> degrees;

  ProblemShape() = default;
  ProblemShape(int n_, int p_, std::vector<int> degrees_) : n(n_), p(p_), degrees(std::move(degrees_)) { validate(); }

  void validate() const {
    if (n < 1) throw ShapeError("n must be positive");
    if (p < 0 || p >= n) throw ShapeError("need 0 <= p < n");
    if (static_cast<int>(degrees.size()) != p + 1) throw ShapeError("need exactly p+1 degrees");
    if (degrees[0] < 1) throw ShapeError("d0 must be >= 1");
    for (int i = 1; i <= p; ++i)
      if (degrees[i] < 2) throw ShapeError("constraint degrees must be >= 2");
  }

  int d(int i) const { return degrees.at(i); }
  int max_degree() const { return *std::max_element(degrees.begin(), degrees.end()); }
  /// max_i (d_i - 1)
  int max_reduced_degree() const { return max_degree() - 1; }
  /// s = sum_i (d_i - 1): degree of a maximal minor of the weighted U matrix.
  int minor_degree() const {
    int s = 0;
    for (int dd : degrees) s += dd - 1;
    return s;
  }

  std::string to_string() const {
    std::string s = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " d=(";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
    return s + ")";
  }

  friend bool operator==(const ProblemShape&, const ProblemShape&) = default;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// All k-subsets of {0..n-1} as sorted index tuples, in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Determinants of all k x k submatrices of a k-row matrix, one per column subset in
/// lexicographic order. Laplace expansion along the first row, memoized on the set
/// of remaining columns.
inline std::vector<Polynomial> maximal_minors(const PolyMatrix& m, int k) {
  if (k < 1 || static_cast<int>(m.size()) != k) throw DimensionError("matrix must have exactly k rows");
  int cols = static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols) throw DimensionError("ragged matrix");
  if (k > cols) throw DimensionError("minor size exceeds column count");
  if (cols > 63) throw SizeGuardError("too many columns for minor expansion");
  const RingPtr& ring = m[0][0].ring();

  std::unordered_map<std::uint64_t, Polynomial> memo;
  std::function<Polynomial(std::uint64_t)> det = [&](std::uint64_t mask) -> Polynomial {
    int row = k - std::popcount(mask);
    if (mask == 0) return Polynomial::constant(ring, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial acc(ring);
    int idx = 0;
    for (int c = 0; c < cols; ++c) {
      if (!(mask >> c & 1)) continue;
      const Polynomial& entry = m[row][c];
      if (!entry.is_zero()) {
        Polynomial sub = det(mask & ~(std::uint64_t{1} << c));
        Polynomial term = entry * sub;
        acc = (idx % 2 == 0) ? acc + term : acc - term;
      }
      ++idx;
    }
    memo.emplace(mask, acc);
    return acc;
  };

  std::vector<Polynomial> out;
  for (const auto& s : subsets(cols, k)) {
    std::uint64_t mask = 0;
    for (int c : s) mask |= std::uint64_t{1} << c;
    out.push_back(det(mask));
  }
  return out;
}

/// Objective q and constraints F = (f1..fp) in GF(p)[X1..Xn].
struct CriticalSystem {
  ProblemShape shape;
  RingPtr ring;
  Polynomial q;
  std::vector<Polynomial> constraints;

  const PrimeField& field() const { return ring->field; }

  void validate() const {
    shape.validate();
    if (static_cast<int>(ring->nvars()) != shape.n) throw ShapeError("ring variable count differs from n");
    if (static_cast<int>(constraints.size()) != shape.p) throw ShapeError("constraint count differs from p");
    if (q.degree() > shape.d(0)) throw ShapeError("deg(q) exceeds d0");
    for (int i = 1; i <= shape.p; ++i)
      if (constraints[i - 1].degree() > shape.d(i)) throw ShapeError("deg(f_i) exceeds d_i");
  }

  /// (q, f1, ..., fp)
  std::vector<Polynomial> all() const {
    std::vector<Polynomial> v{q};
    v.insert(v.end(), constraints.begin(), constraints.end());
    return v;
  }
};

/// (p+1) x n matrix: row 0 is grad q, row i is grad f_i.
inline PolyMatrix jacobian(const CriticalSystem& sys) {
  PolyMatrix jac;
  for (const auto& f : sys.all()) {
    std::vector<Polynomial> row;
    for (int j = 0; j < sys.shape.n; ++j) row.push_back(f.derivative(static_cast<std::size_t>(j)));
    jac.push_back(std::move(row));
  }
  return jac;
}

struct GeneratorSet {
  std::vector<Polynomial> constraints;
  std::vector<Polynomial> minors;

  /// Constraints first, then minors in column-subset order.
  std::vector<Polynomial> all() const {
    std::vector<Polynomial> v = constraints;
    v.insert(v.end(), minors.begin(), minors.end());
    return v;
  }
};

inline GeneratorSet critical_generators(const CriticalSystem& sys) {
  return {sys.constraints, maximal_minors(jacobian(sys), sys.shape.p + 1)};
}

/// f^h = H^deg(f) f(X/H) in the ring X1..Xn,H (H is the last, smallest variable).
inline Polynomial homogenize(const Polynomial& f, const RingPtr& ring_h) {
  std::size_t n = f.ring()->nvars();
  if (ring_h->nvars() != n + 1) throw DimensionError("homogenizing ring must have one extra variable");
  int d = f.degree();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    auto e = t.monomial.exponents();
    e.push_back(d - t.monomial.total_degree());
    out.push_back({Monomial(e, ring_h->grading), t.coeff});
  }
  return Polynomial(ring_h, std::move(out));
}

/// Set H = 1.
inline Polynomial dehomogenize(const Polynomial& f, const RingPtr& ring_x) {
  std::size_t n = ring_x->nvars();
  if (f.ring()->nvars() != n + 1) throw DimensionError("dehomogenizing ring must have one fewer variable");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    auto e = t.monomial.exponents();
    e.pop_back();
    out.push_back({Monomial(e, ring_x->grading), t.coeff});
  }
  return Polynomial(ring_x, std::move(out));
}

/// (q^h, F^h) in X1..Xn,H.
struct HomogenizedSystem {
  ProblemShape shape;
  RingPtr ring;
  Polynomial q;
  std::vector<Polynomial> constraints;

  /// F^h together with the maximal minors of the Jacobian of (q^h, F^h) in X1..Xn.
  GeneratorSet generators() const {
    PolyMatrix jac;
    std::vector<Polynomial> rows{q};
    rows.insert(rows.end(), constraints.begin(), constraints.end());
    for (const auto& f : rows) {
      std::vector<Polynomial> row;
      for (int j = 0; j < shape.n; ++j) row.push_back(f.derivative(static_cast<std::size_t>(j)));
      jac.push_back(std::move(row));
    }
    return {constraints, maximal_minors(jac, shape.p + 1)};
  }
};

inline HomogenizedSystem homogenize(const CriticalSystem& sys) {
  auto ring_h = make_x_ring(static_cast<std::size_t>(sys.shape.n), sys.field(), OrderKind::grevlex, true);
  HomogenizedSystem h{sys.shape, ring_h, homogenize(sys.q, ring_h), {}};
  for (const auto& f : sys.constraints) h.constraints.push_back(homogenize(f, ring_h));
  return h;
}

/// (q^inf, f1^inf, ..., fp^inf); requires each component to reach its nominal degree.
inline CriticalSystem highest_system(const CriticalSystem& sys) {
  auto top = [&](const Polynomial& f, int d) {
    Polynomial h = f.highest_part();
    if (h.degree() != d) throw UndefinedInput("component degree is below its nominal degree");
    return h;
  };
  CriticalSystem out{sys.shape, sys.ring, top(sys.q, sys.shape.d(0)), {}};
  for (int i = 1; i <= sys.shape.p; ++i) out.constraints.push_back(top(sys.constraints[i - 1], sys.shape.d(i)));
  return out;
}

/// Number of monomials of degree <= d in n variables.
inline std::uint64_t coefficient_slots(int n, int d) { return binomial(n + d, n); }

/// Dense polynomial of degree exactly d with uniform coefficients.
inline Polynomial random_dense(const RingPtr& ring, int d, std::mt19937_64& rng) {
  const auto& F = ring->field;
  std::uniform_int_distribution<Coeff> coeff(0, F.modulus() - 1);
  std::uniform_int_distribution<Coeff> nonzero(1, F.modulus() - 1);
  std::vector<Term> terms;
  bool top_nonzero = false;
  for (const auto& m : monomials_up_to_degree(ring->grading, d)) {
    Coeff c = coeff(rng);
    if (c && m.degree() == d) top_nonzero = true;
    terms.push_back({m, c});
  }
  if (!top_nonzero) {
    // Force degree d: redraw one top-degree coefficient from the nonzero residues.
    for (auto& t : terms)
      if (t.monomial.degree() == d) {
        t.coeff = nonzero(rng);
        break;
      }
  }
  return Polynomial(ring, std::move(terms));
}

/// Deterministic for a fixed (shape, field, seed).
inline CriticalSystem random_instance(const ProblemShape& shape, PrimeField field, std::uint64_t seed) {
  shape.validate();
  std::mt19937_64 rng(seed);
  auto ring = make_x_ring(static_cast<std::size_t>(shape.n), field);
  CriticalSystem sys{shape, ring, random_dense(ring, shape.d(0), rng), {}};
  for (int i = 1; i <= shape.p; ++i) sys.constraints.push_back(random_dense(ring, shape.d(i), rng));
  return sys;
}

/// Seed for the `attempt`-th resample of a base seed (splitmix64 step).
inline std::uint64_t resample_seed(std::uint64_t seed, int attempt) {
  if (attempt == 0) return seed;
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Instance file:
//
//   # comment
//   prime 65521
//   n 2
//   p 1
//   degrees 1 2
//   q X1
//   F X1^2+X2^2+65520
//
// with one `F` line per constraint, in order.

inline void write_instance(std::ostream& os, const CriticalSystem& sys) {
  os << "prime " << sys.field().modulus() << '\n';
  os << "n " << sys.shape.n << '\n';
  os << "p " << sys.shape.p << '\n';
  os << "degrees";
  for (int d : sys.shape.degrees) os << ' ' << d;
  os << '\n';
  os << "q " << sys.q.to_string() << '\n';
  for (const auto& f : sys.constraints) os << "F " << f.to_string() << '\n';
}

inline CriticalSystem read_instance(std::istream& is) {
  std::optional<Coeff> prime;
  std::optional<int> n, p;
  std::optional<std::vector<int>> degrees;
  struct PolyLine {
    std::string text;
    int line;
    int column;
  };
  std::optional<PolyLine> q_line;
  std::vector<PolyLine> f_lines;

  std::string line;
  int lineno = 0;
  auto parse_int = [&](const std::string& tok, int col) -> long {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("expected an integer, got '" + tok + "'", lineno, col);
    }
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t key_end = line.find_first_of(" \t", start);
    std::string key = line.substr(start, key_end == std::string::npos ? std::string::npos : key_end - start);
    std::size_t val_start = key_end == std::string::npos ? line.size() : line.find_first_not_of(" \t", key_end);
    if (val_start == std::string::npos) val_start = line.size();
    std::string value = line.substr(val_start);
    while (!value.empty() && (value.back() == '\r' || value.back() == ' ' || value.back() == '\t')) value.pop_back();
    int col = static_cast<int>(val_start) + 1;
    if (value.empty()) throw ParseError("missing value for '" + key + "'", lineno, col);

    if (key == "prime") {
      prime = static_cast<Coeff>(parse_int(value, col));
    } else if (key == "n") {
      n = static_cast<int>(parse_int(value, col));
    } else if (key == "p") {
      p = static_cast<int>(parse_int(value, col));
    } else if (key == "degrees") {
      std::vector<int> ds;
      std::istringstream ss(value);
      std::string tok;
      while (ss >> tok) ds.push_back(static_cast<int>(parse_int(tok, col)));
      degrees = ds;
    } else if (key == "q") {
      q_line = PolyLine{value, lineno, col};
    } else if (key == "F") {
      f_lines.push_back({value, lineno, col});
    } else {
      throw ParseError("unknown field '" + key + "'", lineno, static_cast<int>(start) + 1);
    }
  }
  int end_line = lineno + 1;
  if (!n) throw ParseError("missing field 'n'", end_line, 1);
  if (!p) throw ParseError("missing field 'p'", end_line, 1);
  if (!degrees) throw ParseError("missing field 'degrees'", end_line, 1);
  if (!q_line) throw ParseError("missing field 'q'", end_line, 1);
  PrimeField field(prime.value_or(kDefaultPrime));
  ProblemShape shape(*n, *p, *degrees);
  if (static_cast<int>(f_lines.size()) != shape.p)
    throw ParseError("expected " + std::to_string(shape.p) + " 'F' lines", end_line, 1);
  auto ring = make_x_ring(static_cast<std::size_t>(shape.n), field);
  CriticalSystem sys{shape, ring, parse_polynomial(q_line->text, ring, q_line->line, q_line->column), {}};
  for (const auto& fl : f_lines) sys.constraints.push_back(parse_polynomial(fl.text, ring, fl.line, fl.column));
  sys.validate();
  return sys;
}

inline CriticalSystem read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  return read_instance(in);
}

}  // namespace critpt

#endif  // CRITPT_CRITICAL_SYSTEM_HPP
