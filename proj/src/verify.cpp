#include "conirr/verify.hpp"

#include <algorithm>

#include "conirr/linalg.hpp"

namespace conirr {

namespace {

void append(std::vector<std::string>& out, std::vector<std::string> more, const std::string& ctx) {
  for (auto& s : more) out.push_back(ctx + ": " + s);
}

std::string corner_label(const Corner& c) {
  return "corner (" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ")";
}

}  // namespace

std::vector<std::string> verify_certificate(const RationalMatrix& m, const PolyhedralCone& cone,
                                            const QuasipositivityCertificate& cert) {
  std::vector<std::string> out;
  const RationalMatrix& rays = cone.extremal_rays();
  if (cert.shift < 0) out.push_back("negative shift");
  if (cert.witnesses.rows() != rays.cols() || cert.witnesses.cols() != rays.cols()) {
    out.push_back("witness matrix has the wrong shape");
    return out;
  }
  if (!is_nonnegative(cert.witnesses)) out.push_back("negative witness coefficient");
  const RationalMatrix shifted =
      m + cert.shift * RationalMatrix::Identity(m.rows(), m.cols());
  if (rays * cert.witnesses != shifted * rays)
    out.push_back("R * Z differs from (M + shift I) * R");
  return out;
}

std::vector<std::string> verify_face(const PolyhedralCone& cone, const Face& face,
                                     bool allow_trivial) {
  std::vector<std::string> out;
  const RationalMatrix& rays = cone.extremal_rays();
  const auto& ext = cone.extremal_indices();
  if (face.support.size() != cone.ambient_dim()) {
    out.push_back("support normal has the wrong length");
    return out;
  }
  std::size_t members = 0;
  for (std::size_t k = 0; k < ext.size(); ++k) {
    const bool in = std::binary_search(face.extremal_index_set.begin(),
                                       face.extremal_index_set.end(), ext[k]);
    members += in;
    const Rational v = face.support.dot(rays.col(static_cast<Index>(k)));
    if (in && v != 0) out.push_back("support normal not tight on extremal " + std::to_string(ext[k] + 1));
    if (!in && v <= 0)
      out.push_back("support normal not positive on extremal " + std::to_string(ext[k] + 1));
  }
  if (members != face.extremal_index_set.size()) out.push_back("index set names a non-extremal generator");
  if (!allow_trivial && (members == 0 || members == ext.size())) out.push_back("face is trivial");
  return out;
}

std::vector<std::string> verify_reducibility(const RationalMatrix& m, const PolyhedralCone& cone,
                                             const ReducibilityWitness& witness) {
  std::vector<std::string> out = verify_face(cone, witness.face);
  const Face& f = witness.face;
  const RationalMatrix& u = f.span_basis;
  if (rank(u) != u.cols()) out.push_back("span basis is dependent");
  for (Index g : f.extremal_index_set) {
    const Index pos = extremal_position(cone, g);
    if (pos >= 0 && !in_span(cone.extremal_rays().col(pos), u))
      out.push_back("extremal " + std::to_string(g + 1) + " outside the span basis");
  }
  for (Index k = 0; k < u.cols(); ++k) {
    const Index pos = [&] {
      for (Index j = 0; j < cone.extremal_rays().cols(); ++j)
        if (cone.extremal_rays().col(j) == u.col(k)) return j;
      return Index{-1};
    }();
    if (pos < 0 || !std::binary_search(f.extremal_index_set.begin(), f.extremal_index_set.end(),
                                       cone.extremal_indices()[static_cast<std::size_t>(pos)]))
      out.push_back("span basis column is not an extremal of the face");
  }
  if (witness.action.rows() != u.cols() || witness.action.cols() != u.cols())
    out.push_back("action matrix has the wrong shape");
  else if (m * u != u * witness.action)
    out.push_back("M * U differs from U * action");
  return out;
}

std::vector<std::string> verify_report(const ProblemInstance& instance,
                                       const AnalysisReport& report) {
  std::vector<std::string> out;
  const PolyhedralCone& cone = instance.cone;

  if (!report.hypothesis_imA.pass) {
    if (!report.hypothesis_imA.face) {
      out.push_back("imA: failure without a face");
    } else {
      const Face& f = *report.hypothesis_imA.face;
      append(out, verify_face(cone, f), "imA face");
      if (report.hypothesis_imA.coefficients.rows() != f.span_basis.cols() ||
          f.span_basis * report.hypothesis_imA.coefficients != instance.a)
        out.push_back("imA: A differs from span_basis * coefficients");
    }
  }

  const std::vector<Corner> expected = corners(instance.btilde);
  const auto& checks = report.hypothesis_quasipos.checks;
  if (checks.size() != expected.size()) out.push_back("quasipos: corner count mismatch");
  bool all = true;
  for (std::size_t k = 0; k < checks.size() && k < expected.size(); ++k) {
    if (!(checks[k].corner == expected[k])) out.push_back("quasipos: corner order mismatch");
    if (!checks[k].certificate) {
      all = false;
      continue;
    }
    append(out,
           verify_certificate(corner_product(instance.a, checks[k].corner), cone,
                              *checks[k].certificate),
           "quasipos " + corner_label(checks[k].corner));
  }
  if (all != report.hypothesis_quasipos.holds) out.push_back("quasipos: summary flag inconsistent");

  if (instance.b) {
    const bool sc = is_strongly_connected(build_GAB(instance.a, *instance.b));
    if (report.strongly_connected != sc) out.push_back("criterion: strong connectivity flag wrong");
  } else if (report.strongly_connected) {
    out.push_back("criterion: evaluated without a concrete B");
  }

  Verdict expected_verdict = Verdict::Inconclusive;
  if (!report.hypothesis_imA.pass)
    expected_verdict = Verdict::ReducibleWithWitness;
  else if (!report.hypothesis_quasipos.holds)
    expected_verdict = Verdict::HypothesisFailed;
  else if (report.strongly_connected.value_or(false))
    expected_verdict = Verdict::IrreducibleByTheorem;
  if (report.verdict != expected_verdict)
    out.push_back("verdict " + to_string(report.verdict) + " should be " +
                  to_string(expected_verdict));

  if (report.verdict == Verdict::ReducibleWithWitness) {
    if (!report.witness) {
      out.push_back("reducible verdict without a witness face");
    } else if (instance.b) {
      if (!report.witness_action)
        out.push_back("reducible verdict without an action matrix");
      else
        append(out,
               verify_reducibility(instance.product(), cone,
                                   ReducibilityWitness{*report.witness, *report.witness_action}),
               "witness");
    }
  }

  if (report.oracle) {
    if (!instance.b) out.push_back("oracle: ran without a concrete B");
    else if (!report.oracle->irreducible) {
      if (!report.oracle->witness)
        out.push_back("oracle: reducible without a witness");
      else
        append(out, verify_reducibility(instance.product(), cone, *report.oracle->witness),
               "oracle witness");
    }
    if (report.verdict == Verdict::IrreducibleByTheorem && !report.oracle->irreducible)
      out.push_back("oracle contradicts the criterion");
  }
  return out;
}

}  // namespace conirr
