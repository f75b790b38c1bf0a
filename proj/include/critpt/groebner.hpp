#ifndef CRITPT_GROEBNER_HPP
#define CRITPT_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "critpt/errors.hpp"
#include "critpt/polynomial.hpp"
#include "critpt/series.hpp"

namespace critpt {

/// Reduced, monic Groebner basis sorted by increasing leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> polys;

  const MonomialOrder& order() const { return ring->order; }
  std::size_t size() const { return polys.size(); }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lm;
    for (const auto& g : polys) lm.push_back(g.leading_monomial());
    return lm;
  }
  bool is_unit() const { return polys.size() == 1 && polys[0].is_constant(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return *a.ring == *b.ring && a.polys == b.polys;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& g : polys) s += g.to_string() + "\n";
    return s;
  }
};

namespace detail {

/// Terms stored in increasing order so that the leading term sits at the back.
using AscTerms = std::vector<Term>;

inline AscTerms to_ascending(const Polynomial& f) { return AscTerms(f.terms().rbegin(), f.terms().rend()); }

/// h -= c * mu * g with h ascending and g in the usual decreasing order.
inline void sub_mul(AscTerms& h, const Polynomial& g, const Monomial& mu, Coeff c, const Ring& ring) {
  const auto& F = ring.field;
  const auto& ord = ring.order;
  const auto& gt = g.terms();
  AscTerms out;
  out.reserve(h.size() + gt.size());
  std::size_t i = 0;
  std::size_t j = gt.size();
  Coeff negc = F.neg(c);
  while (i < h.size() || j > 0) {
    if (j == 0) {
      out.push_back(h[i++]);
      continue;
    }
    Term t{gt[j - 1].monomial * mu, F.mul(gt[j - 1].coeff, negc)};
    if (i == h.size()) {
      out.push_back(t);
      --j;
      continue;
    }
    auto cmp = ord.compare(h[i].monomial, t.monomial);
    if (cmp < 0) {
      out.push_back(h[i++]);
    } else if (cmp > 0) {
      out.push_back(t);
      --j;
    } else {
      Coeff s = F.add(h[i].coeff, t.coeff);
      if (s) out.push_back({h[i].monomial, s});
      ++i;
      --j;
    }
  }
  h = std::move(out);
}

inline const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& basis) {
  for (const Polynomial* g : basis)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

inline Polynomial normal_form_ptrs(const Polynomial& f, const std::vector<const Polynomial*>& basis) {
  const Ring& ring = *f.ring();
  const auto& F = ring.field;
  AscTerms h = to_ascending(f);
  std::vector<Term> rem;
  while (!h.empty()) {
    Term lt = h.back();
    if (const Polynomial* g = find_reducer(lt.monomial, basis)) {
      Coeff c = F.div(lt.coeff, g->leading_coeff());
      sub_mul(h, *g, lt.monomial / g->leading_monomial(), c, ring);
    } else {
      rem.push_back(lt);
      h.pop_back();
    }
  }
  return Polynomial::from_sorted(f.ring(), std::move(rem));
}

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  const Ring& ring = *a.ring();
  Monomial l = Monomial::lcm(a.leading_monomial(), b.leading_monomial(), ring.grading);
  Polynomial sa = a.mul_term(l / a.leading_monomial(), ring.field.inv(a.leading_coeff()));
  Polynomial sb = b.mul_term(l / b.leading_monomial(), ring.field.inv(b.leading_coeff()));
  return sa - sb;
}

}  // namespace detail

/// Full reduction of f modulo the polynomials of g (any finite set of nonzero polynomials).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& p : g)
    if (!p.is_zero()) ptrs.push_back(&p);
  return detail::normal_form_ptrs(f, ptrs);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) { return normal_form(f, g.polys); }

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) { return detail::s_polynomial(a, b); }

/// Drop elements whose leading monomial is divisible by another's, reduce tails, make monic
/// and sort by increasing leading monomial.
inline GroebnerBasis interreduce(const RingPtr& ring, std::vector<Polynomial> gens) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  const auto& ord = ring->order;
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g.monic());
  }
  GroebnerBasis gb{ring, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    const Polynomial& g = minimal[i];
    Polynomial tail = Polynomial::from_sorted(ring, std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
    Polynomial reduced = Polynomial::monomial(ring, g.leading_monomial(), g.leading_coeff()) +
                         detail::normal_form_ptrs(tail, others);
    gb.polys.push_back(reduced.monic());
  }
  return gb;
}

/// True when f reduces to zero; stops at the first irreducible leading term.
inline bool reduces_to_zero(const Polynomial& f, const std::vector<const Polynomial*>& basis) {
  const Ring& ring = *f.ring();
  detail::AscTerms h = detail::to_ascending(f);
  while (!h.empty()) {
    const Term& lt = h.back();
    const Polynomial* g = detail::find_reducer(lt.monomial, basis);
    if (!g) return false;
    Coeff c = ring.field.div(lt.coeff, g->leading_coeff());
    detail::sub_mul(h, *g, lt.monomial / g->leading_monomial(), c, ring);
  }
  return true;
}

/// Every S-polynomial reduces to zero. Pairs with coprime leading monomials are skipped, as
/// are pairs (i, j) admitting k with LM_k | lcm(i, j) and both lcm(i, k), lcm(j, k) proper
/// divisors of lcm(i, j): by induction on the lcm those have standard representations.
/// Returns the first offending pair, if any.
inline std::optional<std::pair<int, int>> buchberger_criterion_failure(const std::vector<Polynomial>& g) {
  std::vector<const Polynomial*> ptrs;
  std::vector<Monomial> lm;
  for (const auto& p : g) {
    ptrs.push_back(&p);
    lm.push_back(p.leading_monomial());
  }
  if (g.empty()) return std::nullopt;
  const Grading& grading = g.front().ring()->grading;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (lm[i].coprime(lm[j])) continue;
      Monomial l = Monomial::lcm(lm[i], lm[j], grading);
      bool chained = false;
      for (std::size_t k = 0; k < g.size() && !chained; ++k) {
        if (k == i || k == j || !lm[k].divides(l)) continue;
        chained = !(Monomial::lcm(lm[i], lm[k], grading) == l) && !(Monomial::lcm(lm[j], lm[k], grading) == l);
      }
      if (chained) continue;
      if (!reduces_to_zero(detail::s_polynomial(g[i], g[j]), ptrs))
        return std::pair<int, int>{static_cast<int>(i), static_cast<int>(j)};
    }
  return std::nullopt;
}

inline bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  return !buchberger_criterion_failure(gb.polys).has_value();
}

/// Textbook Buchberger: normal selection strategy with the Gebauer-Moeller installation of
/// the product and chain criteria. Output is the reduced monic basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, RingPtr ring = nullptr) {
  if (gens.empty()) throw UndefinedInput("buchberger needs at least one generator");
  if (!ring) ring = gens.front().ring();
  for (const auto& g : gens)
    if (g.ring()->nvars() != ring->nvars()) throw DimensionError("generators from different rings");

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Polynomial> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  const auto& grading = ring->grading;
  const auto& ord = ring->order;

  auto basis_ptrs = [&] {
    std::vector<const Polynomial*> b;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) b.push_back(&polys[k]);
    return b;
  };

  auto install = [&](Polynomial h) {
    h = h.monic();
    std::size_t hi = polys.size();
    const Monomial lh = h.leading_monomial();
    polys.push_back(std::move(h));
    active.push_back(true);

    std::vector<Pair> cand;
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k]) cand.push_back({k, hi, Monomial::lcm(polys[k].leading_monomial(), lh, grading)});
    // Chain criterion among the new pairs: a pair survives if it is coprime or no other
    // pending or kept new pair has an lcm dividing its own.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const auto& pa = cand[a];
      bool survive = polys[pa.i].leading_monomial().coprime(lh);
      if (!survive) {
        survive = true;
        for (std::size_t b = a + 1; b < cand.size() && survive; ++b)
          if (cand[b].lcm.divides(pa.lcm)) survive = false;
        for (const auto& pk : kept)
          if (pk.lcm.divides(pa.lcm)) survive = false;
      }
      if (survive) kept.push_back(pa);
    }
    // Product criterion, applied only after coprime pairs have served in the chain test.
    std::erase_if(kept, [&](const Pair& pr) { return polys[pr.i].leading_monomial().coprime(lh); });
    // Old pairs whose lcm is strictly divisible through lh.
    std::erase_if(pairs, [&](const Pair& pr) {
      if (!lh.divides(pr.lcm)) return false;
      Monomial li = Monomial::lcm(polys[pr.i].leading_monomial(), lh, grading);
      Monomial lj = Monomial::lcm(polys[pr.j].leading_monomial(), lh, grading);
      return !(li == pr.lcm) && !(lj == pr.lcm);
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k] && lh.divides(polys[k].leading_monomial())) active[k] = false;
  };

  for (const auto& g0 : gens) {
    Polynomial g = g0.ring() == ring ? g0 : g0.in_ring(ring);
    Polynomial h = detail::normal_form_ptrs(g, basis_ptrs());
    if (!h.is_zero()) install(std::move(h));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      auto c = ord.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    Pair pr = *best;
    pairs.erase(best);
    Polynomial s = detail::s_polynomial(polys[pr.i], polys[pr.j]);
    Polynomial h = detail::normal_form_ptrs(s, basis_ptrs());
    if (!h.is_zero()) install(std::move(h));
  }

  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) out.push_back(polys[k]);
  if (out.empty()) return GroebnerBasis{ring, {}};
  return interreduce(ring, std::move(out));
}

/// Standard monomials of a monomial ideal given by its generators.
class Staircase {
public:
  Staircase() = default;
  Staircase(RingPtr ring, std::vector<Monomial> monomials) : ring_(std::move(ring)), monomials_(std::move(monomials)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

private:
  RingPtr ring_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, Monomial::Hash> index_;
};

inline bool is_standard(const Monomial& m, const std::vector<Monomial>& leading) {
  for (const auto& l : leading)
    if (l.divides(m)) return false;
  return true;
}

inline bool is_zero_dimensional(const GroebnerBasis& gb) {
  auto lms = gb.leading_monomials();
  for (std::size_t v = 0; v < gb.ring->nvars(); ++v) {
    bool pure = false;
    for (const auto& m : lms) {
      bool only_v = m[v] > 0;
      for (std::size_t w = 0; w < m.nvars() && only_v; ++w)
        if (w != v && m[w]) only_v = false;
      if (only_v || m.is_one()) pure = true;
    }
    if (!pure) return false;
  }
  return true;
}

inline constexpr std::size_t kDefaultStaircaseCap = 100000;

/// Quotient basis, sorted increasingly. Raises PositiveDimension when the staircase is
/// infinite or larger than `cap`.
inline Staircase staircase(const GroebnerBasis& gb, std::size_t cap = kDefaultStaircaseCap) {
  if (!is_zero_dimensional(gb)) throw PositiveDimension("ideal is not zero-dimensional");
  auto lms = gb.leading_monomials();
  const auto& ring = gb.ring;
  std::vector<Monomial> found;
  std::unordered_set<Monomial, Monomial::Hash> seen;
  std::deque<Monomial> queue;
  Monomial one(ring->nvars());
  if (is_standard(one, lms)) {
    queue.push_back(one);
    seen.insert(one);
  }
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    found.push_back(m);
    if (found.size() > cap) throw PositiveDimension("staircase exceeds the cap of " + std::to_string(cap));
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      Monomial next = m.times_variable(v, ring->grading[v]);
      if (seen.count(next) || !is_standard(next, lms)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  std::sort(found.begin(), found.end(), [&](const Monomial& a, const Monomial& b) { return ring->order.less(a, b); });
  return Staircase(ring, std::move(found));
}

inline std::size_t quotient_dimension(const GroebnerBasis& gb, std::size_t cap = kDefaultStaircaseCap) {
  return staircase(gb, cap).size();
}

// ---------------------------------------------------------------------------
// Brute-force Hilbert function of a homogeneous ideal.

namespace detail {

inline std::size_t rank_mod_p(std::vector<std::vector<Coeff>> rows, const PrimeField& F) {
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size(), rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Coeff inv = F.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = F.mul(v, inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      Coeff f = rows[r][c];
      if (!f) continue;
      for (std::size_t k = c; k < ncols; ++k)
        if (rows[rank][k]) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// dim R_d - rank of the degree-d block {mu g : deg mu = d - deg g}, for d = 0..truncation.
inline std::vector<std::int64_t> hilbert_function_by_rank(const std::vector<Polynomial>& gens, int truncation) {
  if (gens.empty()) throw UndefinedInput("no generators");
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens)
    if (!g.is_zero() && !g.is_homogeneous()) throw UndefinedInput("hilbert_bruteforce needs homogeneous generators");
  std::vector<std::int64_t> out;
  bool saturated = false;
  for (int d = 0; d <= truncation; ++d) {
    auto cols = monomials_of_degree(ring->grading, d);
    if (saturated) {
      out.push_back(0);
      continue;
    }
    std::unordered_map<Monomial, std::size_t, Monomial::Hash> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
    std::vector<std::vector<Coeff>> rows;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      int gd = g.terms().front().monomial.degree();
      if (gd > d) continue;
      for (const auto& mu : monomials_of_degree(ring->grading, d - gd)) {
        std::vector<Coeff> row(cols.size(), 0);
        for (const auto& t : g.terms()) row[index.at(t.monomial * mu)] = t.coeff;
        rows.push_back(std::move(row));
      }
    }
    auto rank = detail::rank_mod_p(std::move(rows), ring->field);
    auto dim = static_cast<std::int64_t>(cols.size() - rank);
    out.push_back(dim);
    // Once I_d = R_d every higher degree is saturated too.
    if (dim == 0 && d > 0) saturated = true;
  }
  return out;
}

/// Number of standard monomials of each degree 0..truncation for the leading-term ideal of gb.
inline std::vector<std::int64_t> hilbert_function_by_staircase(const GroebnerBasis& gb, int truncation) {
  auto lms = gb.leading_monomials();
  std::vector<std::int64_t> out;
  for (int d = 0; d <= truncation; ++d) {
    std::int64_t count = 0;
    for (const auto& m : monomials_of_degree(gb.ring->grading, d))
      if (is_standard(m, lms)) ++count;
    out.push_back(count);
  }
  return out;
}

/// Hilbert series of R/<gens> truncated at `truncation`, computed two ways (ranks of Macaulay
/// blocks and the Groebner staircase); the two must agree coefficientwise.
inline IntPolynomial1V hilbert_bruteforce(const std::vector<Polynomial>& gens, int truncation) {
  auto by_rank = hilbert_function_by_rank(gens, truncation);
  auto by_stairs = hilbert_function_by_staircase(buchberger(gens), truncation);
  if (by_rank != by_stairs) throw ConsistencyError("rank-based and staircase-based Hilbert functions disagree");
  return IntPolynomial1V(by_rank);
}

// ---------------------------------------------------------------------------
// FGLM

/// Multiplication-by-X_v on the quotient basis: tables[v][col] holds the coordinates of
/// NF(X_v * b_col), i.e. column col of the matrix.
struct MultiplicationTables {
  Staircase basis;
  std::vector<std::vector<std::vector<Coeff>>> tables;

  std::size_t dimension() const { return basis.size(); }

  /// M_v * x for a coordinate vector x.
  std::vector<Coeff> apply(std::size_t v, const std::vector<Coeff>& x, const PrimeField& F) const {
    std::size_t n = dimension();
    std::vector<std::uint64_t> acc(n, 0);
    const auto& cols = tables[v];
    for (std::size_t c = 0; c < n; ++c) {
      if (!x[c]) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (cols[c][r]) acc[r] = (acc[r] + std::uint64_t{cols[c][r]} * x[c]) % F.modulus();
    }
    return std::vector<Coeff>(acc.begin(), acc.end());
  }

  /// M_a M_b == M_b M_a for every pair of variables.
  bool commute(const PrimeField& F) const {
    std::size_t n = dimension();
    for (std::size_t a = 0; a < tables.size(); ++a)
      for (std::size_t b = a + 1; b < tables.size(); ++b)
        for (std::size_t c = 0; c < n; ++c) {
          auto ab = apply(a, tables[b][c], F);
          auto ba = apply(b, tables[a][c], F);
          if (ab != ba) return false;
        }
    return true;
  }
};

inline std::vector<Coeff> coordinates(const Polynomial& nf, const Staircase& basis) {
  std::vector<Coeff> v(basis.size(), 0);
  for (const auto& t : nf.terms()) {
    auto idx = basis.index_of(t.monomial);
    if (!idx) throw ConsistencyError("normal form has a term outside the staircase");
    v[*idx] = t.coeff;
  }
  return v;
}

inline MultiplicationTables multiplication_tables(const GroebnerBasis& gb, std::size_t cap = kDefaultStaircaseCap) {
  MultiplicationTables mt{staircase(gb, cap), {}};
  const auto& ring = gb.ring;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    std::vector<std::vector<Coeff>> cols;
    for (const auto& b : mt.basis.monomials()) {
      Polynomial xb = Polynomial::monomial(ring, b.times_variable(v, ring->grading[v]));
      cols.push_back(coordinates(normal_form(xb, gb), mt.basis));
    }
    mt.tables.push_back(std::move(cols));
  }
  return mt;
}

/// Change of order for a zero-dimensional ideal: walks monomials of the target order upward,
/// detecting linear dependencies among their normal-form vectors.
inline GroebnerBasis fglm(const GroebnerBasis& gb, const RingPtr& target, std::size_t cap = kDefaultStaircaseCap) {
  if (target->nvars() != gb.ring->nvars()) throw DimensionError("target ring has a different variable count");
  const PrimeField& F = gb.ring->field;
  if (gb.is_unit()) return GroebnerBasis{target, {Polynomial::constant(target, 1)}};
  MultiplicationTables mt = multiplication_tables(gb, cap);
  const std::size_t dim = mt.dimension();
  const std::size_t nv = target->nvars();
  const auto& tord = target->order;

  struct Echelon {
    std::vector<Coeff> row;
    std::size_t pivot;
    std::vector<Coeff> comb;  // row = sum comb[j] * vec(L_j)
  };
  std::vector<Monomial> lex_basis;
  std::vector<std::vector<Coeff>> lex_vecs;
  std::vector<Echelon> echelon;
  std::vector<Polynomial> out;
  std::vector<Monomial> out_lms;

  // Candidates: (monomial, index in lex_basis of the predecessor, variable) or the unit.
  struct Cand {
    Monomial m;
    std::size_t pred;
    std::size_t var;
  };
  std::vector<Cand> cands;
  Monomial one(nv);
  {
    auto idx = mt.basis.index_of(Monomial(gb.ring->nvars()));
    if (!idx) throw ConsistencyError("1 is not a standard monomial");
  }
  bool first = true;
  auto add_successors = [&](std::size_t li) {
    for (std::size_t v = 0; v < nv; ++v) {
      Monomial m = lex_basis[li].times_variable(v, target->grading[v]);
      bool dup = false;
      for (const auto& c : cands)
        if (c.m == m) dup = true;
      if (!dup) cands.push_back({m, li, v});
    }
  };

  while (first || !cands.empty()) {
    Monomial m = one;
    std::vector<Coeff> vec(dim, 0);
    if (first) {
      vec[*mt.basis.index_of(Monomial(gb.ring->nvars()))] = 1;
      first = false;
    } else {
      auto it = std::min_element(cands.begin(), cands.end(),
                                 [&](const Cand& a, const Cand& b) { return tord.less(a.m, b.m); });
      Cand c = *it;
      cands.erase(it);
      if (!is_standard(c.m, out_lms)) continue;
      m = c.m;
      vec = mt.apply(c.var, lex_vecs[c.pred], F);
    }
    std::vector<Coeff> w = vec;
    std::vector<Coeff> comb(lex_basis.size() + 1, 0);
    for (const auto& e : echelon) {
      Coeff f = w[e.pivot];
      if (!f) continue;
      f = F.div(f, e.row[e.pivot]);
      for (std::size_t k = 0; k < dim; ++k)
        if (e.row[k]) w[k] = F.sub(w[k], F.mul(f, e.row[k]));
      for (std::size_t k = 0; k < e.comb.size(); ++k)
        if (e.comb[k]) comb[k] = F.sub(comb[k], F.mul(f, e.comb[k]));
    }
    auto nz = std::find_if(w.begin(), w.end(), [](Coeff x) { return x != 0; });
    if (nz == w.end()) {
      // vec(m) + sum comb_j vec(L_j) = 0, so m + sum comb_j L_j lies in the ideal.
      std::vector<Term> terms{{m, 1}};
      for (std::size_t j = 0; j < lex_basis.size(); ++j)
        if (comb[j]) terms.push_back({lex_basis[j], comb[j]});
      out.push_back(Polynomial(target, std::move(terms)));
      out_lms.push_back(m);
    } else {
      std::size_t li = lex_basis.size();
      comb[li] = 1;
      echelon.push_back({w, static_cast<std::size_t>(nz - w.begin()), comb});
      lex_basis.push_back(m);
      lex_vecs.push_back(std::move(vec));
      if (lex_basis.size() > dim) throw ConsistencyError("FGLM produced more standard monomials than the quotient dimension");
      add_successors(li);
    }
  }
  for (auto& e : echelon) e.comb.resize(lex_basis.size(), 0);
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return tord.less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis{target, std::move(out)};
}

/// Lex basis in shape position: {h(X_n)} plus X_i - g_i(X_n) for i < n, with deg h = dimension.
inline bool in_shape_position(const GroebnerBasis& lex, std::size_t dimension) {
  std::size_t n = lex.ring->nvars();
  if (lex.polys.size() != n) return false;
  auto only_last = [&](const Monomial& m) {
    for (std::size_t v = 0; v + 1 < n; ++v)
      if (m[v]) return false;
    return true;
  };
  const auto& h = lex.polys.front();
  for (const auto& t : h.terms())
    if (!only_last(t.monomial)) return false;
  if (static_cast<std::size_t>(h.leading_monomial()[n - 1]) != dimension) return false;
  for (std::size_t k = 1; k < n; ++k) {
    const auto& g = lex.polys[k];
    std::size_t var = n - 1 - k;
    const Monomial& lm = g.leading_monomial();
    if (lm[var] != 1 || lm.total_degree() != 1) return false;
    for (std::size_t t = 1; t < g.terms().size(); ++t)
      if (!only_last(g.terms()[t].monomial)) return false;
  }
  return true;
}

}  // namespace critpt

#endif  // CRITPT_GROEBNER_HPP
