#include "conirr/positivity.hpp"

#include <string>

#include "conirr/lp.hpp"

namespace conirr {

namespace {

void require_square(const RationalMatrix& m, const PolyhedralCone& cone, const char* op) {
  if (m.rows() != m.cols() || m.rows() != cone.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", cone ambient dimension " +
                            std::to_string(cone.ambient_dim()));
}

}  // namespace

bool is_K_positive(const RationalMatrix& m, const PolyhedralCone& cone) {
  require_square(m, cone, "is_K_positive");
  const RationalMatrix& rays = cone.extremal_rays();
  for (Index i = 0; i < rays.cols(); ++i)
    if (!contains(cone, m * rays.col(i))) return false;
  return true;
}

std::optional<QuasipositivityCertificate> is_K_quasipositive(const RationalMatrix& m,
                                                             const PolyhedralCone& cone) {
  require_square(m, cone, "is_K_quasipositive");
  const RationalMatrix& rays = cone.extremal_rays();
  const Index n = rays.rows();
  const Index r = rays.cols();

  // Variables: shift, then z_0 .. z_{r-1} (r entries each), all >= 0.
  //   R z_i - shift * R_i = M R_i
  LpProblem lp;
  lp.equality = RationalMatrix::Zero(n * r, 1 + r * r);
  lp.rhs.resize(n * r);
  for (Index i = 0; i < r; ++i) {
    lp.equality.block(i * n, 0, n, 1) = -rays.col(i);
    lp.equality.block(i * n, 1 + i * r, n, r) = rays;
    lp.rhs.segment(i * n, n) = m * rays.col(i);
  }
  lp.nonneg.assign(static_cast<std::size_t>(1 + r * r), true);

  const Feasibility f = lp_feasible(lp);
  if (!f.feasible) return std::nullopt;
  QuasipositivityCertificate cert;
  cert.shift = f.witness(0);
  cert.witnesses.resize(r, r);
  for (Index i = 0; i < r; ++i) cert.witnesses.col(i) = f.witness.segment(1 + i * r, r);
  return cert;
}

RationalMatrix corner_product(const RationalMatrix& a, const Corner& corner) {
  if (corner.row < 0 || corner.row >= a.cols() || corner.col < 0 || corner.col >= a.rows())
    throw DimensionMismatch("corner_product: corner outside Btilde's shape");
  RationalMatrix out = RationalMatrix::Zero(a.rows(), a.rows());
  out.col(corner.col) = Rational(corner.sign) * a.col(corner.row);
  return out;
}

FamilyQuasipositivity family_quasipositive(const RationalMatrix& a, const SignPattern& btilde,
                                           const PolyhedralCone& cone) {
  if (a.rows() != cone.ambient_dim() || btilde.rows() != a.cols() || btilde.cols() != a.rows())
    throw DimensionMismatch("family_quasipositive: A must be n x m and Btilde m x n with n = " +
                            std::to_string(cone.ambient_dim()));
  FamilyQuasipositivity out;
  out.holds = true;
  for (const Corner& c : corners(btilde)) {
    CornerCheck check{c, is_K_quasipositive(corner_product(a, c), cone)};
    if (!check.certificate && out.holds) {
      out.holds = false;
      out.failing = c;
    }
    out.checks.push_back(std::move(check));
  }
  return out;
}

}  // namespace conirr
