#pragma once

#include <string>
#include <vector>

#include "conirr/analyzer.hpp"

namespace conirr {

// Independent re-checks by exact substitution. Each returns a list of
// human-readable problems; an empty list means the object verified.

std::vector<std::string> verify_certificate(const RationalMatrix& m, const PolyhedralCone& cone,
                                            const QuasipositivityCertificate& cert);

/// The support normal exposes exactly the face's extremals, and the face is
/// nontrivial unless `allow_trivial`.
std::vector<std::string> verify_face(const PolyhedralCone& cone, const Face& face,
                                     bool allow_trivial = false);

/// span_basis spans the face and M * span_basis == span_basis * action.
std::vector<std::string> verify_reducibility(const RationalMatrix& m, const PolyhedralCone& cone,
                                             const ReducibilityWitness& witness);

/// Re-checks every certificate and witness of a report against its instance,
/// recomputes the digraph criterion and the verdict rule.
std::vector<std::string> verify_report(const ProblemInstance& instance,
                                       const AnalysisReport& report);

}  // namespace conirr
