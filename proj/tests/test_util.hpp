#ifndef CRITPT_TEST_UTIL_HPP
#define CRITPT_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "critpt/critpt.hpp"

namespace testutil {

using namespace critpt;

inline Monomial random_monomial(std::mt19937_64& rng, const Grading& g, int max_exp = 3) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> exps(g.size());
  for (auto& x : exps) x = e(rng);
  return Monomial(exps, g);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int terms = 5, int max_exp = 3) {
  std::uniform_int_distribution<Coeff> c(0, ring->field.modulus() - 1);
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) t.push_back({random_monomial(rng, ring->grading, max_exp), c(rng)});
  return Polynomial(ring, std::move(t));
}

/// First seed in [seed, seed + tries) whose instance has a zero-dimensional critical ideal of
/// the expected degree.
inline CriticalSystem generic_instance(const ProblemShape& shape, std::uint64_t seed, int tries = 6) {
  for (int a = 0; a < tries; ++a) {
    auto sys = random_instance(shape, PrimeField(), resample_seed(seed, a));
    try {
      auto gb = buchberger(critical_generators(sys).all());
      if (static_cast<std::int64_t>(quotient_dimension(gb)) == algebraic_degree(shape)) return sys;
    } catch (const PositiveDimension&) {
    }
  }
  throw GenericityFailure("no generic instance found");
}

}  // namespace testutil

#endif  // CRITPT_TEST_UTIL_HPP
