#include "catch_amalgamated.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "test_util.hpp"

using namespace critpt;

namespace {

IntPolynomialMV t(int m, int i) { return IntPolynomialMV::variable(m, i); }
IntPolynomialMV c(int m, std::int64_t v) { return IntPolynomialMV::constant(m, v); }

IntPolynomialMV random_mv(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> e(0, 3), coef(-5, 5);
  IntPolynomialMV h(m);
  for (int k = 0; k < 6; ++k) {
    std::vector<int> ex(static_cast<std::size_t>(m));
    for (auto& x : ex) x = e(rng);
    h.add_term(ex, coef(rng));
  }
  return h;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_CASE("divided difference examples", "[divided]") {
  CHECK(divided_difference(t(2, 1), 1) == c(2, 1));
  CHECK(divided_difference(t(2, 1) * t(2, 2), 1).is_zero());
  CHECK(divided_difference(t(2, 1) * t(2, 1), 1) == t(2, 1) + t(2, 2));
  CHECK(divided_difference(t(3, 3), 1).is_zero());
  CHECK_THROWS_AS(divided_difference(t(2, 1), 2), DimensionError);
  CHECK_THROWS_AS(divided_difference(t(2, 1), 0), DimensionError);
}

TEST_CASE("divided differences square to zero", "[divided][property]") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = random_mv(rng, 4);
    for (int i = 1; i <= 3; ++i) REQUIRE(divided_difference(divided_difference(h, i), i).is_zero());
  }
}

TEST_CASE("permutation basics", "[permutation]") {
  Permutation w({1, 3, 4, 2});
  CHECK(w.length() == 2);
  // Ascent i: the value i stands left of the value i+1.
  CHECK(w.ascents() == std::vector<int>{1, 3});
  CHECK(Permutation::longest(4).length() == 6);
  CHECK(Permutation::longest(4).ascents().empty());
  CHECK(Permutation::identity(4).length() == 0);
  // Right multiplication by a transposition exchanges values, not positions.
  CHECK(w.times_transposition(2) == Permutation({1, 2, 4, 3}));
  CHECK(w.times_transposition(1).length() == 3);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), UndefinedInput);
  CHECK_THROWS_AS(Permutation({0, 1}), UndefinedInput);
  CHECK_THROWS_AS(w.times_transposition(4), DimensionError);
}

TEST_CASE("Grothendieck base cases", "[grothendieck]") {
  CHECK(grothendieck_poly(Permutation::longest(2)) == c(2, 1) - t(2, 1));
  for (int m = 1; m <= 5; ++m) CHECK(grothendieck_poly(Permutation::identity(m)) == c(m, 1));
  // Longest element of S_3: (1 - t1)^2 (1 - t2).
  auto one_minus = [](int i) { return c(3, 1) - t(3, i); };
  CHECK(grothendieck_poly(Permutation::longest(3)) == one_minus(1) * one_minus(1) * one_minus(2));
}

TEST_CASE("Grothendieck polynomial of the determinantal permutation", "[grothendieck]") {
  auto g = grothendieck_poly(Permutation({1, 3, 4, 2}));
  const int m = 4;
  auto want = t(m, 1) * t(m, 1) * t(m, 2) + t(m, 1) * t(m, 2) * t(m, 2) - c(m, 3) * t(m, 1) * t(m, 2) + c(m, 1);
  CHECK(g == want);
  CHECK(g.support_bound() == 2);
}

TEST_CASE("descent path independence", "[grothendieck][property]") {
  // Every ascent i of v gives an alternative first step; each must reproduce the memoized value.
  for (int m = 2; m <= 5; ++m) {
    GrothendieckTable table(m);
    for (const auto& v : all_permutations(m)) {
      const auto& ref = table.get(v);
      for (int i : v.ascents()) REQUIRE(table.step(v, i) == ref);
    }
  }
}

TEST_CASE("determinantal permutation", "[grothendieck]") {
  CHECK(determinantal_permutation(ProblemShape(3, 1, {3, 2})) == Permutation({1, 3, 4, 2}));
  CHECK(determinantal_permutation(ProblemShape(2, 1, {2, 2})) == Permutation({1, 3, 2}));
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> want;
    for (int i = 1; i <= n - 1; ++i) want.push_back(i);
    want.push_back(n + 1);
    want.push_back(n);
    CHECK(determinantal_permutation(ProblemShape(n, n - 1, std::vector<int>(static_cast<std::size_t>(n), 2))) ==
          Permutation(want));
  }
}

TEST_CASE("K-polynomial examples", "[kpoly]") {
  ProblemShape s(3, 1, {3, 2});
  CHECK(evaluate_kpoly(s) == IntPolynomial1V{1, 0, 0, -3, 1, 1});
  CHECK(evaluate_kpoly(s).to_string() == "t^5+t^4-3*t^3+1");
  ProblemShape q(2, 1, {2, 2});
  CHECK(evaluate_kpoly(q) == hs_determinantal(q).numerator());
}

TEST_CASE("K-polynomial equals the determinantal numerator", "[kpoly][property]") {
  for (int n = 1; n <= 5; ++n)
    for (int p = 0; p < n; ++p) {
      std::vector<int> d(static_cast<std::size_t>(p) + 1, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == d.size()) {
          ProblemShape shape(n, p, d);
          INFO(shape.to_string());
          auto k = evaluate_kpoly(shape);
          REQUIRE(k == hs_determinantal(shape).numerator());
          REQUIRE(grothendieck_poly(determinantal_permutation(shape)).support_bound() <= p + 1);
          // Only the unconstrained linear objective has a zero-weight minor.
          if (!(p == 0 && d[0] == 1)) REQUIRE(k[0] == 1);
          return;
        }
        for (int v = i == 0 ? 1 : 2; v <= 4; ++v) {
          d[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
    }
}

TEST_CASE("Grothendieck size guard", "[grothendieck]") {
  CHECK_NOTHROW(GrothendieckTable(kMaxGrothendieckVars));
  CHECK_THROWS_AS(GrothendieckTable(kMaxGrothendieckVars + 1), SizeGuardError);
  CHECK_THROWS_AS(GrothendieckTable(0), DimensionError);
  GrothendieckTable small(3);
  CHECK_THROWS_AS(small.get(Permutation::identity(4)), DimensionError);
  CHECK_THROWS_AS(small.step(Permutation::longest(3), 1), UndefinedInput);
}
