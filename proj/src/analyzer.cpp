#include "conirr/analyzer.hpp"

#include "conirr/linalg.hpp"

namespace conirr {

namespace {

// Coefficients C with basis * C == columns, or nullopt if some column escapes.
std::optional<RationalMatrix> express_in(const RationalMatrix& basis,
                                         const RationalMatrix& columns) {
  RationalMatrix c(basis.cols(), columns.cols());
  for (Index k = 0; k < columns.cols(); ++k) {
    auto x = solve_in_span(basis, columns.col(k));
    if (!x) return std::nullopt;
    c.col(k) = *x;
  }
  return c;
}

}  // namespace

void ProblemInstance::validate() const {
  const Index n = cone.ambient_dim();
  if (a.rows() != n)
    throw DimensionMismatch("A has " + std::to_string(a.rows()) +
                            " rows but the cone lives in dimension " + std::to_string(n));
  if (btilde.rows() != a.cols() || btilde.cols() != n)
    throw DimensionMismatch("Btilde must be " + std::to_string(a.cols()) + "x" +
                            std::to_string(n));
  if (b) {
    if (b->rows() != btilde.rows() || b->cols() != btilde.cols())
      throw DimensionMismatch("B must have the shape of Btilde");
    if (!class_member(*b, btilde, QualitativeClass::Q0))
      throw std::invalid_argument("B is not in Q0(Btilde)");
  }
}

RationalMatrix ProblemInstance::product() const {
  if (!b) throw std::logic_error("ProblemInstance::product: no concrete B");
  return a * *b;
}

ImageHypothesis check_imA_hypothesis(const RationalMatrix& a, const PolyhedralCone& cone) {
  if (a.rows() != cone.ambient_dim())
    throw DimensionMismatch("check_imA_hypothesis: A rows differ from ambient dimension");
  ImageHypothesis out;
  // Face spans nest under inclusion, so maximal faces suffice.
  for (const Face& f : maximal_nontrivial_faces(cone)) {
    if (auto c = express_in(f.span_basis, a)) {
      out.pass = false;
      out.face = f;
      out.coefficients = std::move(*c);
      break;
    }
  }
  return out;
}

OracleVerdict oracle_irreducible(const RationalMatrix& m, const PolyhedralCone& cone) {
  if (m.rows() != m.cols() || m.rows() != cone.ambient_dim())
    throw DimensionMismatch("oracle_irreducible: matrix must be n x n with n the ambient dimension");
  OracleVerdict out;
  for (const Face& f : cone.faces()) {
    if (f.trivial) continue;
    if (auto action = express_in(f.span_basis, m * f.span_basis)) {
      out.irreducible = false;
      out.witness = ReducibilityWitness{f, std::move(*action)};
      break;
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IrreducibleByTheorem: return "IrreducibleByTheorem";
    case Verdict::ReducibleWithWitness: return "ReducibleWithWitness";
    case Verdict::HypothesisFailed: return "HypothesisFailed";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::IrreducibleByTheorem, Verdict::ReducibleWithWitness,
                    Verdict::HypothesisFailed, Verdict::Inconclusive})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict \"" + s + "\"");
}

AnalysisReport analyze(const ProblemInstance& instance, const AnalyzeOptions& options) {
  instance.validate();
  AnalysisReport report;
  report.hypothesis_imA = check_imA_hypothesis(instance.a, instance.cone);
  report.hypothesis_quasipos = family_quasipositive(instance.a, instance.btilde, instance.cone);
  if (instance.b)
    report.strongly_connected = is_strongly_connected(build_GAB(instance.a, *instance.b));

  if (!report.hypothesis_imA.pass) {
    // Im(AB) lies in Im A, hence in span F, for every B.
    report.verdict = Verdict::ReducibleWithWitness;
    const Face& f = *report.hypothesis_imA.face;
    report.witness = f;
    if (instance.b)
      report.witness_action = RationalMatrix(report.hypothesis_imA.coefficients * *instance.b *
                                             f.span_basis);
  } else if (!report.hypothesis_quasipos.holds) {
    report.verdict = Verdict::HypothesisFailed;
  } else if (report.strongly_connected.value_or(false)) {
    report.verdict = Verdict::IrreducibleByTheorem;
  } else {
    report.verdict = Verdict::Inconclusive;
  }

  if (options.run_oracle && instance.b) {
    report.oracle = oracle_irreducible(instance.product(), instance.cone);
    if (report.verdict == Verdict::IrreducibleByTheorem && !report.oracle->irreducible)
      throw SoundnessViolation("criterion certified irreducibility but the oracle found an "
                               "invariant face span", report);
    if (report.verdict == Verdict::ReducibleWithWitness && report.oracle->irreducible)
      throw SoundnessViolation("Im A lies in a face span but the oracle found no invariant "
                               "face span", report);
  }
  return report;
}

}  // namespace conirr
