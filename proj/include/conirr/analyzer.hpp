#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "conirr/cone.hpp"
#include "conirr/digraph.hpp"
#include "conirr/positivity.hpp"
#include "conirr/sign_pattern.hpp"

namespace conirr {

/// K, an n x m factor A, the sign pattern Btilde (m x n) whose closure Q0
/// is the complete set of second factors, and optionally one concrete B.
struct ProblemInstance {
  PolyhedralCone cone;
  RationalMatrix a;
  SignPattern btilde;
  std::optional<RationalMatrix> b;

  /// Throws DimensionMismatch, or std::invalid_argument when b is not in Q0(btilde).
  void validate() const;
  /// A * B; requires b.
  RationalMatrix product() const;
};

/// Either every column of A escapes the span of each nontrivial face, or
/// `face` is a nontrivial face with A == face.span_basis * coefficients.
struct ImageHypothesis {
  bool pass = true;
  std::optional<Face> face;
  RationalMatrix coefficients;
};

ImageHypothesis check_imA_hypothesis(const RationalMatrix& a, const PolyhedralCone& cone);

/// M leaves span(face) invariant: M * face.span_basis == face.span_basis * action.
struct ReducibilityWitness {
  Face face;
  RationalMatrix action;
};

struct OracleVerdict {
  bool irreducible = true;
  std::optional<ReducibilityWitness> witness;
};

/// Scans every nontrivial face in dimension-ascending order and returns the
/// first whose span M leaves invariant.
OracleVerdict oracle_irreducible(const RationalMatrix& m, const PolyhedralCone& cone);

enum class Verdict {
  IrreducibleByTheorem,  ///< both hypotheses hold and G_{A,B} is strongly connected
  ReducibleWithWitness,  ///< Im A lies in the span of a nontrivial face
  HypothesisFailed,      ///< some corner of Btilde gives a non-quasipositive product
  Inconclusive,          ///< hypotheses hold but no concrete B or G_{A,B} not strongly connected
};

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct AnalysisReport {
  ImageHypothesis hypothesis_imA;
  FamilyQuasipositivity hypothesis_quasipos;
  std::optional<bool> strongly_connected;  ///< absent without a concrete B
  Verdict verdict = Verdict::Inconclusive;
  /// For ReducibleWithWitness. `action` is filled when a concrete B is known.
  std::optional<Face> witness;
  std::optional<RationalMatrix> witness_action;
  std::optional<OracleVerdict> oracle;

  bool hypotheses_hold() const { return hypothesis_imA.pass && hypothesis_quasipos.holds; }
};

struct AnalyzeOptions {
  bool run_oracle = false;
};

/// The theorem-derived verdict and the oracle disagree. Always a bug.
class SoundnessViolation : public std::logic_error {
 public:
  SoundnessViolation(const std::string& what, AnalysisReport report)
      : std::logic_error(what), report_(std::move(report)) {}
  const AnalysisReport& report() const { return report_; }

 private:
  AnalysisReport report_;
};

AnalysisReport analyze(const ProblemInstance& instance, const AnalyzeOptions& options = {});

}  // namespace conirr
