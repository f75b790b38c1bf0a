#include "catch_amalgamated.hpp"

#include <algorithm>

#include "test_util.hpp"

using namespace critpt;

namespace {

CriticalSystem running_example() {
  auto R = make_x_ring(2);
  return {ProblemShape(2, 1, {1, 2}), R, parse_polynomial("X1", R), {parse_polynomial("X1^2+X2^2-1", R)}};
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

// Linear (not monomial-divisibility) reduction against echelon rows with distinct leading monomials.
Polynomial linear_reduce(Polynomial f, const MacaulayMatrix& echelon) {
  const PrimeField& F = echelon.ring->field;
  bool progress = true;
  while (!f.is_zero() && progress) {
    progress = false;
    for (std::size_t r = 0; r < echelon.rows.size(); ++r) {
      auto row = echelon.row_polynomial(r);
      for (const auto& t : f.terms())
        if (t.monomial == row.leading_monomial()) {
          f = f - row.scalar_mul(F.div(t.coeff, row.leading_coeff()));
          progress = true;
          break;
        }
    }
  }
  return f;
}

}  // namespace

TEST_CASE("Macaulay matrix of the running example", "[macaulay]") {
  auto sys = running_example();
  auto gens = critical_generators(sys);
  auto M = build_macaulay(gens, sys.shape, 2);
  auto R = sys.ring;
  CHECK(M.column_count() == 6);
  CHECK(M.columns.front() == Monomial({2, 0}, R->grading));
  CHECK(M.columns.back() == Monomial({0, 0}, R->grading));
  REQUIRE(M.row_count() == 4);
  CHECK(M.row_polynomial(0) == parse_polynomial("X1^2+X2^2-1", R));
  CHECK(M.row_polynomial(1) == parse_polynomial("2*X2", R));
  std::vector<Polynomial> multiples;
  for (std::size_t r = 1; r < 4; ++r) {
    CHECK(M.labels[r].generator == 1);
    multiples.push_back(M.row_polynomial(r));
  }
  for (const auto& want : parse_all({"2*X1*X2", "2*X2^2"}, R))
    CHECK(std::find(multiples.begin(), multiples.end(), want) != multiples.end());
  CHECK(M.row_count() <= macaulay_row_bound(sys.shape, 2));
  CHECK(macaulay_row_bound(sys.shape, 2) == (1 + 1) * 6u);
}

TEST_CASE("Macaulay construction errors", "[macaulay]") {
  auto R = make_x_ring(2);
  CHECK_THROWS_AS(build_macaulay(parse_all({"X1^3"}, R), 2), EmptyMatrixError);
  CHECK_THROWS_AS(build_macaulay(std::vector<Polynomial>{}, 2), EmptyMatrixError);
  auto L = with_order(R, OrderKind::lex);
  CHECK_THROWS_AS(build_macaulay(parse_all({"X1"}, L), 2), UndefinedInput);
}

TEST_CASE("row counts stay below the bound", "[macaulay][property]") {
  for (auto shape : {ProblemShape(3, 1, {3, 2}), ProblemShape(4, 2, {2, 2, 3}), ProblemShape(3, 2, {2, 2, 2})}) {
    auto gens = critical_generators(random_instance(shape, PrimeField(), 2));
    for (int d = shape.max_degree(); d <= witness_degree_bound(shape); ++d) {
      auto M = build_macaulay(gens, shape, d);
      REQUIRE(M.column_count() == binomial(shape.n + d, shape.n));
      REQUIRE(M.row_count() <= macaulay_row_bound(shape, d));
    }
  }
}

TEST_CASE("row echelon of the running example", "[macaulay][echelon]") {
  auto sys = running_example();
  auto R = sys.ring;
  auto E = row_echelon(build_macaulay(critical_generators(sys).all(), 2));
  CHECK(E.reduced);
  CHECK(E.zero_rows == 0);
  REQUIRE(E.row_count() == 4);
  // Pivots X1^2, X1*X2, X2^2, X2 in column order.
  std::vector<Polynomial> rows;
  for (std::size_t r = 0; r < 4; ++r) rows.push_back(E.row_polynomial(r));
  CHECK(rows == parse_all({"X1^2-1", "X1*X2", "X2^2", "X2"}, R));
}

TEST_CASE("row echelon properties", "[macaulay][echelon][property]") {
  auto R = make_x_ring(2);
  // Already echelon and reduced: unchanged.
  auto simple = build_macaulay(parse_all({"X1", "X2"}, R), 1);
  auto E0 = row_echelon(simple);
  CHECK(E0.rows == simple.rows);

  // A duplicated row collapses.
  auto dup = build_macaulay(parse_all({"X1+X2", "3*X1+3*X2"}, R), 1);
  auto E1 = row_echelon(dup);
  CHECK(E1.row_count() == 1);
  CHECK(E1.zero_rows == 1);

  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto gens = critical_generators(random_instance(ProblemShape(3, 1, {2, 2}), PrimeField(), seed)).all();
    auto M = build_macaulay(gens, 3);
    auto E = row_echelon(M);
    // Idempotent.
    auto again = E;
    again.reduced = false;
    REQUIRE(row_echelon(again).rows == E.rows);
    // Pivots strictly increasing and each pivot column is cleared in every other row.
    auto piv = E.pivots();
    for (std::size_t i = 1; i < piv.size(); ++i) REQUIRE(piv[i - 1] < piv[i]);
    for (std::size_t r = 0; r < E.row_count(); ++r) {
      REQUIRE(E.rows[r].front().second == 1u);
      for (std::size_t s = 0; s < E.row_count(); ++s)
        if (s != r)
          for (auto [c, v] : E.rows[s]) REQUIRE(c != piv[r]);
    }
    // Span preserved: rank plus vanished rows equals the input row count, and every input row
    // lies in the span of the echelon rows.
    REQUIRE(E.row_count() + E.zero_rows == M.row_count());
    for (std::size_t r = 0; r < M.row_count(); ++r) REQUIRE(linear_reduce(M.row_polynomial(r), E).is_zero());
  }
}

TEST_CASE("basis extraction", "[macaulay][extract]") {
  auto sys = running_example();
  auto gens = critical_generators(sys).all();
  auto gb = basis_at_degree(gens, 2);
  CHECK(gb.polys == parse_all({"X2", "X1^2-1"}, sys.ring));
  CHECK(gb == buchberger(gens));
  // At degree 1 the quadric never enters the matrix.
  CHECK_THROWS_AS(basis_at_degree(gens, 1), InsufficientDegree);
  CHECK_THROWS_AS(extract_basis(build_macaulay(gens, 2), gens), UndefinedInput);
}

TEST_CASE("low degree raises insufficient degree on a random instance", "[macaulay][extract]") {
  auto sys = testutil::generic_instance(ProblemShape(3, 1, {3, 2}), 4);
  auto gens = critical_generators(sys).all();
  int dwit = dwit_empirical(sys);
  REQUIRE(dwit <= witness_degree_bound(sys.shape));
  REQUIRE(dwit > sys.shape.minor_degree());
  try {
    basis_at_degree(gens, dwit - 1);
    FAIL("expected InsufficientDegree below the witness degree");
  } catch (const InsufficientDegree& e) {
    CHECK((e.first() >= 0 || e.second() >= 0));
  }
  auto gb = basis_at_degree(gens, 5);
  CHECK(quotient_dimension(gb) == 14);
  CHECK(gb == buchberger(gens));
}

TEST_CASE("solve the running example", "[macaulay][solve]") {
  auto sys = running_example();
  auto sol = solve(sys);
  CHECK(sol.basis.polys == parse_all({"X2", "X1^2-1"}, sys.ring));
  CHECK(sol.degree == 2);
  CHECK(sol.attempts == 1);
  CHECK(dwit_empirical(sys) == 2);
  CHECK(witness_degree_bound(sys.shape) == 2);
}

TEST_CASE("twenty quadratic instances", "[macaulay][solve][property]") {
  ProblemShape shape(3, 1, {2, 2});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto sys = testutil::generic_instance(shape, seed);
    auto sol = solve(sys);
    REQUIRE(sol.basis == buchberger(critical_generators(sys).all()));
    REQUIRE(quotient_dimension(sol.basis) == 6);
    REQUIRE(dwit_empirical(sys) <= 3);
  }
}

TEST_CASE("degenerate instance is an error, not an answer", "[macaulay][solve]") {
  auto R = make_x_ring(2);
  CriticalSystem sys{ProblemShape(2, 1, {1, 2}), R, parse_polynomial("X1", R), {parse_polynomial("X1^2", R)}};
  bool refused = false;
  try {
    solve(sys);
  } catch (const PositiveDimension&) {
    refused = true;
  } catch (const GenericityFailure&) {
    refused = true;
  }
  CHECK(refused);
}
