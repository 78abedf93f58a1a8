#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "conirr/analyzer.hpp"
#include "conirr/fuzz.hpp"

namespace conirr {

using Json = nlohmann::ordered_json;

/// Problem file: {"cone": {"ambient_dim": n, "generators": [[...], ...]},
///                "A": [[...], ...], "Btilde": ["+0-", ...], "B": [[...], ...]}
/// Generators are listed column by column, A and B row by row. Throws
/// InputError carrying the line of the offending value.
ProblemInstance parse_problem(std::string_view text, std::size_t face_limit = kDefaultFaceLimit);
PolyhedralCone parse_cone(const Json& j, std::size_t face_limit = kDefaultFaceLimit);

/// Canonical text form; parse_problem(write_problem(x)) reproduces x and
/// re-writing gives identical bytes.
std::string write_problem(const ProblemInstance& instance);

Json to_json(const Rational& r);
Json matrix_to_json(const RationalMatrix& m);          ///< rows
Json columns_to_json(const RationalMatrix& m);         ///< columns
Json vector_to_json(const RationalVector& v);
Json index_set_to_json(const std::vector<Index>& s);  ///< 1-based

Json face_to_json(const Face& f);
Json faces_to_json(const PolyhedralCone& cone);
Json certificate_to_json(const QuasipositivityCertificate& c);
Json quasipositivity_to_json(const FamilyQuasipositivity& q);
Json oracle_to_json(const OracleVerdict& v);
Json report_to_json(const AnalysisReport& report);
Json fuzz_stats_to_json(const FuzzStats& stats);

/// Inverse of report_to_json, for re-verifying emitted reports.
AnalysisReport report_from_json(const Json& j);

}  // namespace conirr
