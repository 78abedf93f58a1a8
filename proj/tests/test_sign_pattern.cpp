#include <doctest.h>

#include <random>

#include "conirr/fixtures.hpp"
#include "conirr/sign_pattern.hpp"
#include "support.hpp"

using namespace conirr;
using namespace conirr::test;

namespace {

SignPattern random_pattern(std::mt19937_64& rng, Index r, Index c) {
  std::uniform_int_distribution<int> s(-1, 1);
  Eigen::MatrixXi m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = s(rng);
  return SignPattern(m);
}

}  // namespace

TEST_CASE("parse and print") {
  const SignPattern p = SignPattern::parse({"-0+", "0+0", "+00"});
  CHECK(p(0, 0) == -1);
  CHECK(p(0, 2) == 1);
  CHECK(p.nonzeros() == 4);
  CHECK(p.to_strings() == std::vector<std::string>{"-0+", "0+0", "+00"});
  CHECK_THROWS_AS(SignPattern::parse({"+x"}), std::invalid_argument);
  CHECK_THROWS_AS(SignPattern::parse({"++", "+"}), std::invalid_argument);
  Eigen::MatrixXi bad(1, 1);
  bad << 2;
  CHECK_THROWS_AS(SignPattern{bad}, std::invalid_argument);
}

TEST_CASE("sign_of") {
  CHECK(sign_of(RationalMatrix::Zero(2, 3)) == SignPattern(Eigen::MatrixXi::Zero(2, 3)));
  const ProblemInstance ex2 = load_fixture("EX2");
  CHECK(sign_of(*ex2.b) == SignPattern::parse({"-0+", "0+0", "+00"}));
  const ProblemInstance ex4 = load_fixture("EX4");
  CHECK(sign_of(RationalMatrix(-ex4.a.transpose())) == ex4.btilde);
}

TEST_CASE("class membership") {
  const SignPattern p = SignPattern::parse({"-0+", "0+0", "+00"});
  CHECK(class_member(representative(p), p, QualitativeClass::Q));
  CHECK(class_member(RationalMatrix::Zero(3, 3), p, QualitativeClass::Q0));
  CHECK_FALSE(class_member(RationalMatrix::Zero(3, 3), p, QualitativeClass::Q));
  RationalMatrix flipped = representative(p);
  flipped(0, 0) = 1;
  CHECK_FALSE(class_member(flipped, p, QualitativeClass::Q1));
  RationalMatrix extra = representative(p);
  extra(1, 0) = q(-7, 3);
  CHECK(class_member(extra, p, QualitativeClass::Q1));
  CHECK_FALSE(class_member(extra, p, QualitativeClass::Q0));
  CHECK_THROWS_AS(class_member(RationalMatrix::Zero(2, 3), p, QualitativeClass::Q), DimensionMismatch);
}

TEST_CASE("Q in Q0 in Q1 on samples") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const SignPattern p = random_pattern(rng, 1 + t % 4, 1 + (t / 4) % 4);
    for (auto cls : {QualitativeClass::Q, QualitativeClass::Q0, QualitativeClass::Q1}) {
      const RationalMatrix m = sample_member(p, cls, rng);
      CHECK(class_member(m, p, cls));
      if (cls == QualitativeClass::Q) CHECK(class_member(m, p, QualitativeClass::Q0));
      if (cls != QualitativeClass::Q1) CHECK(class_member(m, p, QualitativeClass::Q1));
      CHECK(class_member(m, sign_of(m), QualitativeClass::Q));
      for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
          const Rational a = m(i, j) < 0 ? Rational(-m(i, j)) : m(i, j);
          if (a != 0) {
            CHECK(a >= q(1, 4));
            CHECK(a <= 4);
            CHECK(denominator(a * 4) == 1);
          }
        }
    }
  }
}

TEST_CASE("row and column parts") {
  const RationalMatrix i3 = RationalMatrix::Identity(3, 3);
  RationalMatrix e1 = RationalMatrix::Zero(3, 3);
  e1(0, 0) = 1;
  CHECK(row_part(i3, 0) == e1);
  CHECK(col_part(i3, 0) == e1);
  const RationalMatrix m = mat({{1, 2}, {3, 4}});
  CHECK(row_part(m, 1) == mat({{0, 0}, {3, 4}}));
  CHECK(col_part(m, 1) == mat({{0, 2}, {0, 4}}));
  CHECK(row_part(m, 0) + row_part(m, 1) == m);
  CHECK_THROWS_AS(row_part(m, 2), std::out_of_range);
  CHECK_THROWS_AS(col_part(m, -1), std::out_of_range);
}

TEST_CASE("corners") {
  const SignPattern p = SignPattern::parse({"-0+", "0+0", "+00"});
  const std::vector<Corner> expected{{0, 0, -1}, {0, 2, 1}, {1, 1, 1}, {2, 0, 1}};
  CHECK(corners(p) == expected);
  CHECK(corners(SignPattern(Eigen::MatrixXi::Zero(3, 3))).empty());
  CHECK(corners(load_fixture("EX4").btilde).size() == 7);

  std::mt19937_64 rng(47);
  for (int t = 0; t < 50; ++t) {
    const SignPattern r = random_pattern(rng, 1 + t % 5, 1 + t % 3);
    const auto cs = corners(r);
    CHECK(static_cast<Index>(cs.size()) == r.nonzeros());
    RationalMatrix sum = RationalMatrix::Zero(r.rows(), r.cols());
    for (const Corner& c : cs) sum(c.row, c.col) += c.sign;
    CHECK(sum == representative(r));
  }
}

TEST_CASE("completeness") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 20; ++t) CHECK(is_complete_closed(random_pattern(rng, 3, 3), rng));

  // D1 N D2 with D1, D2 nonnegative diagonal, for a fixed N without zeros:
  // m belongs iff m ./ N is a nonnegative matrix of rank at most one.
  const RationalMatrix n = mat({{1, -2, 3}, {-1, 1, 2}});
  auto member = [&](const RationalMatrix& m) {
    RationalMatrix ratio(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) {
        ratio(i, j) = m(i, j) / n(i, j);
        if (ratio(i, j) < 0) return false;
      }
    return gauss_rank(ratio) <= 1;
  };
  std::vector<RationalMatrix> samples;
  for (int s = 0; s < 30; ++s) {
    RationalMatrix d1 = RationalMatrix::Zero(2, 2), d2 = RationalMatrix::Zero(3, 3);
    for (Index i = 0; i < 2; ++i) d1(i, i) = random_rational(rng, 0, 4, 3);
    for (Index i = 0; i < 3; ++i) d2(i, i) = random_rational(rng, 0, 4, 3);
    samples.push_back(d1 * n * d2);
  }
  for (const auto& m : samples) CHECK(member(m));
  CHECK_FALSE(member(mat({{1, 0, 0}, {0, 1, 0}})));
  CHECK(closed_under_parts(samples, member));

  // Q(p) itself is not closed: a row part zeroes strict entries elsewhere.
  const SignPattern p = SignPattern::parse({"-0+", "0+0", "+00"});
  std::vector<RationalMatrix> strict;
  for (int s = 0; s < 5; ++s) strict.push_back(sample_member(p, QualitativeClass::Q, rng));
  CHECK_FALSE(closed_under_parts(strict, [&](const RationalMatrix& m) {
    return class_member(m, p, QualitativeClass::Q);
  }));
}
