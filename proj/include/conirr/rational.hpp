#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace conirr {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator; expression templates are off so the type behaves
/// like a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using Index = Eigen::Index;

/// Parses "p" or "p/q" (optional leading sign on p, q > 0 after parsing).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

/// Entrywise sign, in {-1, 0, +1}.
template <typename Derived>
Eigen::MatrixXi sign_matrix(const Eigen::MatrixBase<Derived>& m) {
  Eigen::MatrixXi out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).sign();
  return out;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) < 0) return false;
  return true;
}

/// Scales v by a positive rational so that its entries are coprime integers.
/// The zero vector is returned unchanged.
RationalVector primitive_integer(const RationalVector& v);

}  // namespace conirr
