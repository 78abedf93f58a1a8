#pragma once

#include <optional>
#include <vector>

#include "conirr/cone.hpp"
#include "conirr/sign_pattern.hpp"

namespace conirr {

/// Witness that M + shift*I maps every extremal ray into the cone:
/// R * witnesses.col(i) == (M + shift*I) * R.col(i), where R is
/// extremal_rays() of the cone, witnesses >= 0 and shift >= 0.
struct QuasipositivityCertificate {
  Rational shift;
  RationalMatrix witnesses;  ///< r x r, column i certifies extremal i
};

bool is_K_positive(const RationalMatrix& m, const PolyhedralCone& cone);

/// Decided as one joint LP in (shift, witnesses); nullopt means no shift works.
std::optional<QuasipositivityCertificate> is_K_quasipositive(const RationalMatrix& m,
                                                             const PolyhedralCone& cone);

/// The n x n rank-one matrix sign * A.col(corner.row) * e_{corner.col}^T, i.e.
/// A times the unit member of Q0(Btilde) supported on one corner.
RationalMatrix corner_product(const RationalMatrix& a, const Corner& corner);

struct CornerCheck {
  Corner corner;
  std::optional<QuasipositivityCertificate> certificate;
};

struct FamilyQuasipositivity {
  bool holds = false;
  std::vector<CornerCheck> checks;  ///< one per corner of Btilde, row-major
  std::optional<Corner> failing;    ///< first corner without a certificate
};

/// Whether A*B is K-quasipositive for every B in Q0(Btilde); checked corner by
/// corner since the family is generated by nonnegative sums of its corners.
FamilyQuasipositivity family_quasipositive(const RationalMatrix& a, const SignPattern& btilde,
                                           const PolyhedralCone& cone);

}  // namespace conirr
