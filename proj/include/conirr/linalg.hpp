#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conirr/errors.hpp"
#include "conirr/rational.hpp"

namespace conirr {

namespace detail {

template <typename Scalar>
void clear_row_denominators(Matrix<Scalar>&) {}

// Scaling a row by a positive integer preserves rank and pivot positions and
// keeps the Bareiss recurrence inside the integers.
inline void clear_row_denominators(Matrix<Rational>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Index j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
    if (l != 1) m.row(i) *= Rational(l);
  }
}

}  // namespace detail

/// Row echelon summary from fraction-free (Bareiss) elimination.
struct EchelonInfo {
  Index rank = 0;
  std::vector<Index> pivot_columns;  ///< ascending; a maximal independent column set
};

template <typename Derived>
EchelonInfo bareiss_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  detail::clear_row_denominators(m);

  EchelonInfo info;
  Scalar prev(1);
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Index i = r + 1; i < m.rows(); ++i) {
      for (Index j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    info.pivot_columns.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return bareiss_echelon(m).rank;
}

/// True iff v is a linear combination of the columns of basis.
template <typename DerivedV, typename DerivedB>
bool in_span(const Eigen::MatrixBase<DerivedV>& v, const Eigen::MatrixBase<DerivedB>& basis) {
  if (v.size() != basis.rows())
    throw DimensionMismatch("in_span: vector length " + std::to_string(v.size()) +
                            " vs basis rows " + std::to_string(basis.rows()));
  using Scalar = typename DerivedB::Scalar;
  Matrix<Scalar> aug(basis.rows(), basis.cols() + 1);
  aug << basis, v;
  return rank(aug) == rank(basis);
}

/// Reduced row echelon form over a field, with the pivot column list.
template <typename Scalar>
std::pair<Matrix<Scalar>, std::vector<Index>> rref(Matrix<Scalar> m) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    m.row(r) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      m.row(i) -= f * m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Some x with basis * x == v, or nullopt when v is outside the column span.
/// Free coordinates of the solution are set to zero.
template <typename DerivedB, typename DerivedV>
std::optional<Vector<typename DerivedB::Scalar>> solve_in_span(
    const Eigen::MatrixBase<DerivedB>& basis, const Eigen::MatrixBase<DerivedV>& v) {
  using Scalar = typename DerivedB::Scalar;
  if (v.size() != basis.rows()) throw DimensionMismatch("solve_in_span: length mismatch");
  Matrix<Scalar> aug(basis.rows(), basis.cols() + 1);
  aug << basis, v;
  auto [red, pivots] = rref<Scalar>(std::move(aug));
  if (!pivots.empty() && pivots.back() == basis.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(basis.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x(pivots[k]) = red(static_cast<Index>(k), basis.cols());
  return x;
}

/// Columns form a basis of the kernel of m.
template <typename Derived>
Matrix<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto [red, pivots] = rref<Scalar>(Matrix<Scalar>(m));
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index c : pivots) is_pivot[c] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(m.cols(), m.cols() - static_cast<Index>(pivots.size()));
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p)
      basis(pivots[p], k) = -red(static_cast<Index>(p), free);
    ++k;
  }
  return basis;
}

/// The columns of m listed by index.
template <typename Derived>
Matrix<typename Derived::Scalar> select_columns(const Eigen::MatrixBase<Derived>& m,
                                                const std::vector<Index>& cols) {
  Matrix<typename Derived::Scalar> out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = m.col(cols[k]);
  return out;
}

}  // namespace conirr
