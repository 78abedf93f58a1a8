#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "conirr/analyzer.hpp"

namespace conirr {

/// Built-in instances: EX1 (orthant, A = I), EX2, EX3, EX4, EX4_SPARSE
/// (EX4 with B22 = B33 = B14 = 0) and CEX (image hypothesis violated).
std::vector<std::string> fixture_names();

/// The fixture file exactly as shipped. Names are case-insensitive.
const std::string& fixture_text(const std::string& name);

ProblemInstance load_fixture(const std::string& name, std::size_t face_limit = kDefaultFaceLimit);

/// Supplementary data for EX4's cone.
struct Ex4Appendix {
  RationalMatrix p_matrix;  ///< nonnegative 8 x 4 with Lambda * P == I
  RationalVector p;         ///< Lambda^T p > 0
  /// Published face lists by dimension, 0-based generator indices.
  std::map<Index, std::vector<std::vector<Index>>> faces;
  /// Entries are "0" or sums of the letters a..g.
  std::vector<std::vector<std::string>> b_template;
  std::vector<std::vector<std::string>> q_template;
};

const Ex4Appendix& ex4_appendix();

using Ex4Parameters = std::array<Rational, 7>;  ///< a, b, c, d, e, f, g

/// The 8 x 8 nonnegative Q with A B Lambda + (a+...+g) Lambda == Lambda Q.
/// Throws std::invalid_argument on a negative parameter.
RationalMatrix appendix_Q(const Ex4Parameters& params);

/// The member of Q0(-A^T) with the given magnitudes.
RationalMatrix appendix_B(const Ex4Parameters& params);

}  // namespace conirr
