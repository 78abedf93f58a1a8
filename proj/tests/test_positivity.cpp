#include <doctest.h>

#include <random>

#include "conirr/analyzer.hpp"
#include "conirr/fixtures.hpp"
#include "conirr/positivity.hpp"
#include "conirr/verify.hpp"
#include "support.hpp"

using namespace conirr;
using namespace conirr::test;

namespace {

// Direct substitution, independent of the library verifier.
bool certificate_holds(const RationalMatrix& m, const PolyhedralCone& k,
                       const QuasipositivityCertificate& c) {
  const RationalMatrix& rays = k.extremal_rays();
  if (c.shift < 0 || c.witnesses.rows() != rays.cols() || c.witnesses.cols() != rays.cols())
    return false;
  for (Index i = 0; i < c.witnesses.rows(); ++i)
    for (Index j = 0; j < c.witnesses.cols(); ++j)
      if (c.witnesses(i, j) < 0) return false;
  return rays * c.witnesses == m * rays + c.shift * rays;
}

bool metzler(const RationalMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("is_K_positive examples") {
  const PolyhedralCone ex4 = load_fixture("EX4").cone;
  CHECK(is_K_positive(RationalMatrix::Identity(4, 4), ex4));
  CHECK(is_K_positive(RationalMatrix::Identity(3, 3), load_fixture("EX3").cone));

  const ProblemInstance cex = load_fixture("CEX");
  std::mt19937_64 rng(59);
  for (int t = 0; t < 10; ++t) {
    RationalMatrix b = random_matrix(rng, 2, 2, 0, 4, 3);
    CHECK(is_K_positive(cex.a * b, cex.cone));
  }
  CHECK_FALSE(is_K_positive(mat({{1, -1}, {0, 1}}), orthant(2)));
  CHECK_THROWS_AS(is_K_positive(RationalMatrix::Identity(3, 3), orthant(2)), DimensionMismatch);
}

TEST_CASE("is_K_quasipositive examples") {
  const PolyhedralCone k = load_fixture("EX2").cone;
  const RationalMatrix id = RationalMatrix::Identity(3, 3);
  auto c0 = is_K_quasipositive(id, k);
  REQUIRE(c0);
  CHECK(certificate_holds(id, k, *c0));

  const ProblemInstance ex2 = load_fixture("EX2");
  const RationalMatrix ab2 = ex2.a * *ex2.b;
  auto c2 = is_K_quasipositive(ab2, ex2.cone);
  REQUIRE(c2);
  CHECK(certificate_holds(ab2, ex2.cone, *c2));
  CHECK(is_K_positive(ab2 + 5 * id, ex2.cone));

  const ProblemInstance ex4 = load_fixture("EX4");
  Ex4Parameters ones;
  ones.fill(Rational(1));
  const RationalMatrix ab4 = ex4.a * appendix_B(ones);
  auto c4 = is_K_quasipositive(ab4, ex4.cone);
  REQUIRE(c4);
  CHECK(certificate_holds(ab4, ex4.cone, *c4));
  CHECK(is_K_positive(ab4 + 7 * RationalMatrix::Identity(4, 4), ex4.cone));
  // The published Q is itself a certificate with shift 7.
  const QuasipositivityCertificate published{Rational(7), appendix_Q(ones)};
  CHECK(certificate_holds(ab4, ex4.cone, published));
  CHECK(verify_certificate(ab4, ex4.cone, published).empty());

  CHECK_FALSE(is_K_quasipositive(mat({{0, -1}, {0, 0}}), orthant(2)));
}

TEST_CASE("positivity implies quasipositivity and shifts are upward closed") {
  std::mt19937_64 rng(61);
  int positive = 0, quasi = 0;
  for (int t = 0; t < 80; ++t) {
    const PolyhedralCone k = random_pointed_cone(rng, 3, 2 + t % 3);
    RationalMatrix m = random_matrix(rng, 3, 3, -2, 3, 2);
    if (t % 2 == 0) {
      // shifted sum of maps ray * facet normal, quasipositive by construction
      const RationalMatrix& rays = k.extremal_rays();
      const RationalMatrix& h = k.facet_normals();
      m = random_rational(rng, -3, 3, 2) * RationalMatrix::Identity(3, 3);
      for (Index f = 0; f < h.rows(); ++f)
        m += random_rational(rng, 0, 2, 2) * rays.col(f % rays.cols()) * h.row(f);
    }
    const auto cert = is_K_quasipositive(m, k);
    if (is_K_positive(m, k)) {
      ++positive;
      CHECK(cert);
    }
    if (!cert) continue;
    ++quasi;
    CHECK(certificate_holds(m, k, *cert));
    CHECK(verify_certificate(m, k, *cert).empty());
    for (int s = 0; s < 3; ++s) {
      const Rational shift = cert->shift + random_rational(rng, 0, 5, 3);
      CHECK(is_K_positive(m + shift * RationalMatrix::Identity(3, 3), k));
    }
  }
  CHECK(quasi > 0);
  CHECK(quasi < 80);
}

TEST_CASE("orthant quasipositivity is the Metzler property") {
  std::mt19937_64 rng(67);
  int agree_true = 0;
  for (int t = 0; t < 200; ++t) {
    const Index n = 1 + t % 4;
    RationalMatrix m = random_matrix(rng, n, n, -1, 4, 2);
    const bool qp = is_K_quasipositive(m, orthant(n)).has_value();
    CHECK(qp == metzler(m));
    agree_true += qp;
  }
  CHECK(agree_true > 20);
}

TEST_CASE("corner products") {
  const RationalMatrix a = mat({{1, 2}, {3, 4}});
  const RationalMatrix p = corner_product(a, Corner{1, 0, -1});
  CHECK(p == mat({{-2, 0}, {-4, 0}}));
}

TEST_CASE("family quasipositivity examples") {
  const ProblemInstance ex2 = load_fixture("EX2");
  const FamilyQuasipositivity f2 = family_quasipositive(ex2.a, ex2.btilde, ex2.cone);
  CHECK(f2.holds);
  CHECK(f2.checks.size() == 4);
  CHECK_FALSE(f2.failing);

  const ProblemInstance ex3 = load_fixture("EX3");
  const FamilyQuasipositivity f3 = family_quasipositive(ex3.a, ex3.btilde, ex3.cone);
  CHECK(f3.holds);
  CHECK(f3.checks.size() == 7);
  for (const auto& c : f3.checks) {
    REQUIRE(c.certificate);
    CHECK(certificate_holds(corner_product(ex3.a, c.corner), ex3.cone, *c.certificate));
  }

  const FamilyQuasipositivity bad =
      family_quasipositive(RationalMatrix::Identity(2, 2), SignPattern::parse({"+-", "0+"}), orthant(2));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.failing);
  CHECK(*bad.failing == Corner{0, 1, -1});
}

TEST_CASE("family quasipositivity covers sampled members") {
  std::mt19937_64 rng(71);
  for (const auto& name : fixture_names()) {
    const ProblemInstance inst = load_fixture(name);
    const FamilyQuasipositivity fam = family_quasipositive(inst.a, inst.btilde, inst.cone);
    REQUIRE(fam.holds);
    for (int s = 0; s < 50; ++s) {
      const RationalMatrix b = sample_member(inst.btilde, QualitativeClass::Q0, rng);
      const RationalMatrix ab = inst.a * b;
      auto cert = is_K_quasipositive(ab, inst.cone);
      REQUIRE(cert);
      CHECK(certificate_holds(ab, inst.cone, *cert));
    }
  }
}
