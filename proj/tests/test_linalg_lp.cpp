#include <doctest.h>

#include <random>

#include "conirr/fixtures.hpp"
#include "conirr/linalg.hpp"
#include "conirr/lp.hpp"
#include "support.hpp"

using namespace conirr;
using namespace conirr::test;

namespace {

void check_witness(const LpProblem& p, const Feasibility& f) {
  REQUIRE(f.feasible);
  REQUIRE(f.witness.size() == p.equality.cols());
  CHECK(p.equality * f.witness == p.rhs);
  for (Index j = 0; j < f.witness.size(); ++j)
    if (p.nonneg[static_cast<std::size_t>(j)]) CHECK(f.witness(j) >= 0);
}

LpProblem nonneg_problem(RationalMatrix e, RationalVector b) {
  LpProblem p;
  p.nonneg.assign(static_cast<std::size_t>(e.cols()), true);
  p.equality = std::move(e);
  p.rhs = std::move(b);
  return p;
}

}  // namespace

TEST_CASE("rational grammar") {
  CHECK(parse_rational("-3/2") == q(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("4/6") == q(2, 3));
  CHECK(to_string(q(4, -6)) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("rank examples") {
  CHECK(rank(RationalMatrix(RationalMatrix::Identity(3, 3))) == 3);
  CHECK(rank(load_fixture("EX2").cone.generators()) == 3);
  CHECK(rank(RationalMatrix(RationalMatrix::Zero(4, 2))) == 0);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rank of transpose and against Gauss-Jordan") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Index> size(1, 6);
  for (int t = 0; t < 200; ++t) {
    const Index r = size(rng), c = size(rng);
    RationalMatrix m = random_matrix(rng, r, c);
    // low-rank products show up often enough to matter
    if (t % 3 == 0) m = random_matrix(rng, r, 2) * random_matrix(rng, 2, c);
    CHECK(rank(m) == rank(RationalMatrix(m.transpose())));
    CHECK(rank(m) == gauss_rank(m));
  }
}

TEST_CASE("in_span examples") {
  const RationalMatrix basis = mat({{2, 0}, {1, 1}, {0, 3}});
  CHECK(in_span(RationalVector(RationalVector::Zero(3)), basis));
  CHECK(in_span(RationalVector(basis.col(0)), basis));
  CHECK_FALSE(in_span(vec({1, 2}), mat({{2}, {1}})));
  CHECK_THROWS_AS(in_span(vec({1, 2, 3}), mat({{2}, {1}})), DimensionMismatch);
}

TEST_CASE("in_span agrees with split-variable LP") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Index> size(1, 4);
  for (int t = 0; t < 150; ++t) {
    const Index n = size(rng), k = size(rng);
    RationalMatrix basis = random_matrix(rng, n, k, -2, 2, 2);
    RationalVector v = random_matrix(rng, n, 1, -3, 3, 2).col(0);
    if (t % 2 == 0) v = basis * random_matrix(rng, k, 1).col(0);
    RationalMatrix split(n, 2 * k);
    split << basis, -basis;
    const Feasibility f = lp_feasible(nonneg_problem(split, v));
    CHECK(in_span(v, basis) == f.feasible);

    LpProblem free_vars;
    free_vars.equality = basis;
    free_vars.rhs = v;
    free_vars.nonneg.assign(static_cast<std::size_t>(k), false);
    const Feasibility g = lp_feasible(free_vars);
    CHECK(g.feasible == f.feasible);
    if (g.feasible) CHECK(basis * g.witness == v);
  }
}

TEST_CASE("solve_in_span and null_space") {
  const RationalMatrix basis = mat({{1, 0}, {1, 1}, {0, 2}});
  auto x = solve_in_span(basis, vec({3, 5, 4}));
  REQUIRE(x);
  CHECK(basis * *x == vec({3, 5, 4}));
  CHECK_FALSE(solve_in_span(basis, vec({1, 0, 0})));

  const RationalMatrix m = mat({{1, 2, 3}, {2, 4, 6}});
  const RationalMatrix ns = null_space(m);
  CHECK(ns.cols() == 2);
  CHECK((m * ns).isZero());
  CHECK(rank(ns) == 2);
}

TEST_CASE("lp_feasible examples") {
  auto p = nonneg_problem(mat({{1, 1}}), vec({1}));
  Feasibility f = lp_feasible(p);
  check_witness(p, f);
  CHECK(f.witness == vec({1, 0}));

  CHECK_FALSE(lp_feasible(nonneg_problem(mat({{1, 1}}), vec({-1}))).feasible);

  auto lambda = load_fixture("EX4").cone.generators();
  auto e1 = nonneg_problem(lambda, vec({1, 0, 0, 0}));
  check_witness(e1, lp_feasible(e1));
}

TEST_CASE("lp validation") {
  LpProblem p = nonneg_problem(mat({{1, 1}}), vec({1, 2}));
  CHECK_THROWS_AS(lp_feasible(p), DimensionMismatch);
}

TEST_CASE("lp agrees with basic-solution enumeration") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Index> rows(1, 3), cols(1, 5);
  int feasible = 0;
  for (int t = 0; t < 300; ++t) {
    const Index m = rows(rng), n = cols(rng);
    auto p = nonneg_problem(random_matrix(rng, m, n, -3, 3, 2), random_matrix(rng, m, 1, -3, 3, 1).col(0));
    const Feasibility f = lp_feasible(p);
    CHECK(f.feasible == brute_force_feasible(p.equality, p.rhs).has_value());
    if (f.feasible) {
      check_witness(p, f);
      ++feasible;
    }
  }
  CHECK(feasible > 30);
  CHECK(feasible < 270);
}

TEST_CASE("Bland's rule terminates on cycling instances") {
  // Beale's example written as equalities with slacks; textbook pivoting with
  // the largest-coefficient rule cycles on it.
  RationalMatrix beale(3, 7);
  beale << q(1, 4), -8, -1, 9, 1, 0, 0,
           q(1, 2), -12, q(-1, 2), 3, 0, 1, 0,
           0, 0, 1, 0, 0, 0, 1;
  auto p = nonneg_problem(beale, vec({0, 0, 1}));
  check_witness(p, lp_feasible(p));

  // Same degenerate vertex with an unreachable right-hand side.
  auto bad = nonneg_problem(beale.leftCols(4), vec({0, 0, -1}));
  CHECK_FALSE(lp_feasible(bad).feasible);

  // Kuhn's cycling example.
  RationalMatrix kuhn(3, 7);
  kuhn << -2, -9, 1, 9, 1, 0, 0,
          q(1, 3), 1, q(-1, 3), -2, 0, 1, 0,
          2, 3, -1, -12, 0, 0, 1;
  auto k = nonneg_problem(kuhn, vec({0, 0, 2}));
  check_witness(k, lp_feasible(k));

  // Highly degenerate: many zero right-hand sides with repeated columns.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    RationalMatrix e = random_matrix(rng, 4, 4, -2, 2, 1);
    RationalMatrix dup(4, 8);
    dup << e, e;
    RationalVector b = RationalVector::Zero(4);
    b(t % 4) = t % 3 - 1;
    auto d = nonneg_problem(dup, b);
    const Feasibility f = lp_feasible(d);
    CHECK(f.feasible == brute_force_feasible(d.equality, d.rhs).has_value());
    if (f.feasible) check_witness(d, f);
  }
}
