#pragma once

#include <stdexcept>
#include <vector>

#include "conirr/errors.hpp"
#include "conirr/rational.hpp"

namespace conirr {

/// Feasibility question  E x = b,  x_j >= 0 where nonneg[j], x_j free otherwise.
template <typename Scalar>
struct BasicLpProblem {
  Matrix<Scalar> equality;
  Vector<Scalar> rhs;
  std::vector<bool> nonneg;

  void validate() const {
    if (rhs.size() != equality.rows())
      throw DimensionMismatch("LpProblem: rhs length differs from equality rows");
    if (static_cast<Index>(nonneg.size()) != equality.cols())
      throw DimensionMismatch("LpProblem: mask length differs from equality columns");
  }
};

template <typename Scalar>
struct BasicFeasibility {
  bool feasible = false;
  Vector<Scalar> witness;  ///< meaningful only when feasible
  explicit operator bool() const { return feasible; }
};

using LpProblem = BasicLpProblem<Rational>;
using Feasibility = BasicFeasibility<Rational>;

namespace detail {

/// Dense phase-1 tableau. Rows 0..m-1 are constraints, row m holds the
/// reduced costs of the artificial-sum objective; the last column is the rhs.
template <typename Scalar>
class PhaseOneTableau {
 public:
  PhaseOneTableau(const Matrix<Scalar>& e, const Vector<Scalar>& b)
      : m_(e.rows()), n_(e.cols()), t_(Matrix<Scalar>::Zero(m_ + 1, n_ + m_ + 1)), basis_(m_) {
    for (Index i = 0; i < m_; ++i) {
      const bool flip = b(i) < 0;
      for (Index j = 0; j < n_; ++j) t_(i, j) = flip ? Scalar(-e(i, j)) : e(i, j);
      t_(i, n_ + i) = 1;
      t_(i, rhs_col()) = flip ? Scalar(-b(i)) : b(i);
      basis_[i] = n_ + i;
    }
    for (Index j = 0; j < n_; ++j) {
      Scalar s = 0;
      for (Index i = 0; i < m_; ++i) s += t_(i, j);
      t_(m_, j) = -s;
    }
    Scalar s = 0;
    for (Index i = 0; i < m_; ++i) s += t_(i, rhs_col());
    t_(m_, rhs_col()) = -s;
  }

  // Bland's rule: lowest-index improving column, ties in the ratio test go
  // to the lowest-index basic variable. Guarantees termination.
  void solve() {
    for (;;) {
      Index enter = -1;
      for (Index j = 0; j < n_ + m_; ++j)
        if (t_(m_, j) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return;

      Index leave = -1;
      Scalar best;
      for (Index i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Scalar ratio = t_(i, rhs_col()) / t_(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      // The artificial objective is bounded below by zero.
      if (leave < 0) throw std::logic_error("phase-1 simplex: unbounded auxiliary problem");
      pivot(leave, enter);
    }
  }

  bool feasible() const { return t_(m_, rhs_col()) == 0; }

  Vector<Scalar> primal() const {
    Vector<Scalar> x = Vector<Scalar>::Zero(n_);
    for (Index i = 0; i < m_; ++i)
      if (basis_[i] < n_) x(basis_[i]) = t_(i, rhs_col());
    return x;
  }

 private:
  Index rhs_col() const { return n_ + m_; }

  void pivot(Index row, Index col) {
    const Scalar inv = Scalar(1) / t_(row, col);
    t_.row(row) *= inv;
    for (Index i = 0; i <= m_; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      const Scalar f = t_(i, col);
      t_.row(i) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  Index m_, n_;
  Matrix<Scalar> t_;
  std::vector<Index> basis_;
};

}  // namespace detail

/// Exact phase-1 simplex. Free variables are split into differences of
/// nonnegative ones; a feasible answer carries x with E x == b exactly.
template <typename Scalar>
BasicFeasibility<Scalar> lp_feasible(const BasicLpProblem<Scalar>& p) {
  p.validate();
  const Index n = p.equality.cols();

  std::vector<Index> split_of(n, -1);
  Index cols = n;
  for (Index j = 0; j < n; ++j)
    if (!p.nonneg[j]) split_of[j] = cols++;

  Matrix<Scalar> e(p.equality.rows(), cols);
  e.leftCols(n) = p.equality;
  for (Index j = 0; j < n; ++j)
    if (split_of[j] >= 0) e.col(split_of[j]) = -p.equality.col(j);

  detail::PhaseOneTableau<Scalar> tableau(e, p.rhs);
  tableau.solve();

  BasicFeasibility<Scalar> out;
  if (!tableau.feasible()) return out;
  const Vector<Scalar> y = tableau.primal();
  out.feasible = true;
  out.witness = y.head(n);
  for (Index j = 0; j < n; ++j)
    if (split_of[j] >= 0) out.witness(j) -= y(split_of[j]);
  if (p.equality * out.witness != p.rhs)
    throw std::logic_error("phase-1 simplex: witness fails substitution");
  return out;
}

}  // namespace conirr
