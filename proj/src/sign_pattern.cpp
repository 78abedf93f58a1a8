#include "conirr/sign_pattern.hpp"

#include <stdexcept>

namespace conirr {

SignPattern::SignPattern(Eigen::MatrixXi signs) : signs_(std::move(signs)) {
  for (Index j = 0; j < signs_.cols(); ++j)
    for (Index i = 0; i < signs_.rows(); ++i)
      if (signs_(i, j) < -1 || signs_(i, j) > 1)
        throw std::invalid_argument("sign pattern entries must lie in {-1, 0, 1}");
}

SignPattern SignPattern::parse(const std::vector<std::string>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = rows.empty() ? 0 : static_cast<Index>(rows.front().size());
  Eigen::MatrixXi s(r, c);
  for (Index i = 0; i < r; ++i) {
    const std::string& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != c)
      throw std::invalid_argument("sign pattern rows have unequal length");
    for (Index j = 0; j < c; ++j) {
      switch (row[static_cast<std::size_t>(j)]) {
        case '+': s(i, j) = 1; break;
        case '-': s(i, j) = -1; break;
        case '0': s(i, j) = 0; break;
        default:
          throw std::invalid_argument("sign pattern character must be one of +, 0, - (got '" +
                                      std::string(1, row[static_cast<std::size_t>(j)]) + "')");
      }
    }
  }
  return SignPattern(std::move(s));
}

std::vector<std::string> SignPattern::to_strings() const {
  std::vector<std::string> out;
  for (Index i = 0; i < rows(); ++i) {
    std::string row;
    for (Index j = 0; j < cols(); ++j) row += signs_(i, j) > 0 ? '+' : signs_(i, j) < 0 ? '-' : '0';
    out.push_back(std::move(row));
  }
  return out;
}

Index SignPattern::nonzeros() const { return static_cast<Index>((signs_.array() != 0).count()); }

SignPattern sign_of(const RationalMatrix& m) { return SignPattern(sign_matrix(m)); }

bool class_member(const RationalMatrix& m, const SignPattern& p, QualitativeClass cls) {
  if (m.rows() != p.rows() || m.cols() != p.cols())
    throw DimensionMismatch("class_member: matrix and sign pattern shapes differ");
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      const int s = m(i, j).sign();
      const int t = p(i, j);
      switch (cls) {
        case QualitativeClass::Q:
          if (s != t) return false;
          break;
        case QualitativeClass::Q0:
          if (s != 0 && s != t) return false;
          break;
        case QualitativeClass::Q1:
          if (s * t < 0) return false;
          break;
      }
    }
  return true;
}

std::vector<Corner> corners(const SignPattern& p) {
  std::vector<Corner> out;
  for (Index i = 0; i < p.rows(); ++i)
    for (Index j = 0; j < p.cols(); ++j)
      if (p(i, j) != 0) out.push_back({i, j, p(i, j)});
  return out;
}

RationalMatrix representative(const SignPattern& p) {
  RationalMatrix out(p.rows(), p.cols());
  for (Index j = 0; j < p.cols(); ++j)
    for (Index i = 0; i < p.rows(); ++i) out(i, j) = p(i, j);
  return out;
}

RationalMatrix sample_member(const SignPattern& p, QualitativeClass cls, std::mt19937_64& rng,
                             double zero_probability) {
  std::uniform_int_distribution<int> grid(1, 16);
  std::uniform_int_distribution<int> any_sign(-1, 1);
  std::bernoulli_distribution zeroed(zero_probability);
  RationalMatrix out(p.rows(), p.cols());
  for (Index j = 0; j < p.cols(); ++j)
    for (Index i = 0; i < p.rows(); ++i) {
      int s = p(i, j);
      if (cls == QualitativeClass::Q0 && s != 0 && zeroed(rng)) s = 0;
      if (cls == QualitativeClass::Q1) s = s == 0 ? any_sign(rng) : (zeroed(rng) ? 0 : s);
      out(i, j) = Rational(s * grid(rng), 4);
    }
  return out;
}

bool is_complete_closed(const SignPattern& p, std::mt19937_64& rng, int samples) {
  std::vector<RationalMatrix> members;
  for (int k = 0; k < samples; ++k) members.push_back(sample_member(p, QualitativeClass::Q0, rng));
  return closed_under_parts(members, [&](const RationalMatrix& m) {
    return class_member(m, p, QualitativeClass::Q0);
  });
}

}  // namespace conirr
