#pragma once

#include <random>
#include <string>
#include <vector>

#include "conirr/errors.hpp"
#include "conirr/rational.hpp"

namespace conirr {

/// Matrix over {-1, 0, +1}.
class SignPattern {
 public:
  SignPattern() = default;
  /// Throws std::invalid_argument if an entry is outside {-1, 0, 1}.
  explicit SignPattern(Eigen::MatrixXi signs);
  /// One string per row over the alphabet {+, 0, -}.
  static SignPattern parse(const std::vector<std::string>& rows);

  Index rows() const { return signs_.rows(); }
  Index cols() const { return signs_.cols(); }
  int operator()(Index i, Index j) const { return signs_(i, j); }
  const Eigen::MatrixXi& signs() const { return signs_; }
  std::vector<std::string> to_strings() const;
  Index nonzeros() const;

  bool operator==(const SignPattern& other) const { return signs_ == other.signs_; }

 private:
  Eigen::MatrixXi signs_;
};

enum class QualitativeClass { Q, Q0, Q1 };

SignPattern sign_of(const RationalMatrix& m);

/// Membership of m in Q(p), Q0(p) or Q1(p).
bool class_member(const RationalMatrix& m, const SignPattern& p, QualitativeClass cls);

/// Zero every entry outside row k.
template <typename Derived>
Matrix<typename Derived::Scalar> row_part(const Eigen::MatrixBase<Derived>& m, Index k) {
  if (k < 0 || k >= m.rows()) throw std::out_of_range("row_part: row index out of range");
  Matrix<typename Derived::Scalar> out = Matrix<typename Derived::Scalar>::Zero(m.rows(), m.cols());
  out.row(k) = m.row(k);
  return out;
}

/// Zero every entry outside column k.
template <typename Derived>
Matrix<typename Derived::Scalar> col_part(const Eigen::MatrixBase<Derived>& m, Index k) {
  if (k < 0 || k >= m.cols()) throw std::out_of_range("col_part: column index out of range");
  Matrix<typename Derived::Scalar> out = Matrix<typename Derived::Scalar>::Zero(m.rows(), m.cols());
  out.col(k) = m.col(k);
  return out;
}

struct Corner {
  Index row = 0;
  Index col = 0;
  int sign = 0;
  bool operator==(const Corner&) const = default;
};

/// Nonzero positions with their signs, row-major.
std::vector<Corner> corners(const SignPattern& p);

/// The member of Q(p) with every magnitude equal to one.
RationalMatrix representative(const SignPattern& p);

/// Random member of the class. Magnitudes are drawn from {1/4, 2/4, ..., 16/4};
/// for Q0 each nonzero position is additionally zeroed with probability
/// `zero_probability`, and for Q1 zero positions of p may carry any sign.
RationalMatrix sample_member(const SignPattern& p, QualitativeClass cls, std::mt19937_64& rng,
                             double zero_probability = 0.3);

/// Checks that every row part and column part of each sample satisfies the
/// membership predicate. Returns false on the first counterexample.
template <typename Pred>
bool closed_under_parts(const std::vector<RationalMatrix>& samples, Pred&& member) {
  for (const auto& m : samples) {
    for (Index k = 0; k < m.rows(); ++k)
      if (!member(row_part(m, k))) return false;
    for (Index k = 0; k < m.cols(); ++k)
      if (!member(col_part(m, k))) return false;
  }
  return true;
}

/// Q0(p) is complete: sampled members stay in Q0(p) under row_part/col_part.
bool is_complete_closed(const SignPattern& p, std::mt19937_64& rng, int samples = 32);

}  // namespace conirr
