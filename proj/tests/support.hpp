#pragma once

// Helpers and independent oracles shared by the test executables. Nothing in
// here calls into the library's linear algebra, LP or graph code.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conirr/cone.hpp"
#include "conirr/rational.hpp"

namespace conirr::test {

inline Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }

inline RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  RationalMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

inline RationalVector vec(std::initializer_list<long> values) {
  RationalVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) v(i++) = Rational(x);
  return v;
}

inline Rational random_rational(std::mt19937_64& rng, long lo = -4, long hi = 4, long max_den = 3) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng)) / Rational(den(rng));
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, Index r, Index c, long lo = -4,
                                    long hi = 4, long max_den = 3) {
  RationalMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = random_rational(rng, lo, hi, max_den);
  return m;
}

/// Plain Gauss-Jordan elimination. Returns the rank and the reduced matrix.
inline Index gauss_rank(RationalMatrix m) {
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(r));
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (Index k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

/// Unique solution of e x = b, or nullopt when e has dependent columns or
/// the system is inconsistent.
inline std::optional<RationalVector> solve_unique(const RationalMatrix& e, const RationalVector& b) {
  const Index n = e.cols();
  RationalMatrix aug(e.rows(), n + 1);
  aug << e, b;
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c <= n && r < aug.rows(); ++c) {
    Index p = r;
    while (p < aug.rows() && aug(p, c) == 0) ++p;
    if (p == aug.rows()) continue;
    if (c == n) return std::nullopt;
    aug.row(p).swap(aug.row(r));
    const Rational lead = aug(r, c);
    for (Index k = c; k <= n; ++k) aug(r, k) /= lead;
    for (Index i = 0; i < aug.rows(); ++i) {
      if (i == r || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      for (Index k = c; k <= n; ++k) aug(i, k) -= f * aug(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  if (static_cast<Index>(pivots.size()) != n) return std::nullopt;
  RationalVector x(n);
  for (Index i = 0; i < n; ++i) x(i) = aug(i, n);
  return x;
}

/// Feasibility of {e x = b, x >= 0} by enumerating basic solutions: the
/// system is feasible iff some set of independent columns carries a
/// nonnegative solution (Caratheodory).
inline std::optional<RationalVector> brute_force_feasible(const RationalMatrix& e,
                                                          const RationalVector& b) {
  const Index n = e.cols();
  if (b.isZero()) return RationalVector(RationalVector::Zero(n));
  const Index max_size = std::min(n, e.rows());
  std::vector<Index> pick;
  std::optional<RationalVector> found;
  auto recurse = [&](auto&& self, Index start) -> void {
    if (found) return;
    if (!pick.empty()) {
      RationalMatrix sub(e.rows(), static_cast<Index>(pick.size()));
      for (std::size_t k = 0; k < pick.size(); ++k) sub.col(static_cast<Index>(k)) = e.col(pick[k]);
      if (auto x = solve_unique(sub, b)) {
        if (std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; })) {
          RationalVector full = RationalVector::Zero(n);
          for (std::size_t k = 0; k < pick.size(); ++k) full(pick[k]) = (*x)(static_cast<Index>(k));
          found = full;
          return;
        }
      }
    }
    if (static_cast<Index>(pick.size()) == max_size) return;
    for (Index j = start; j < n; ++j) {
      pick.push_back(j);
      self(self, j + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return found;
}

/// x in cone(columns of g), decided by basic-solution enumeration.
inline bool in_cone_oracle(const RationalMatrix& g, const RationalVector& x) {
  return brute_force_feasible(g, x).has_value();
}

/// Subset test for face-ness over the extremal rays (columns of `rays`):
/// `subset` is the extremal set of a face iff no conic combination with
/// positive weight outside the subset equals a conic combination inside it.
inline bool face_oracle(const RationalMatrix& rays, const std::vector<Index>& subset) {
  const Index n = rays.rows();
  const Index r = rays.cols();
  std::vector<bool> inside(r, false);
  for (Index i : subset) inside[i] = true;
  const Index k = static_cast<Index>(subset.size());
  // variables: z (r, all rays), w (k, subset rays)
  RationalMatrix e = RationalMatrix::Zero(n + 1, r + k);
  e.topLeftCorner(n, r) = rays;
  for (Index c = 0; c < k; ++c) e.block(0, r + c, n, 1) = -rays.col(subset[c]);
  for (Index j = 0; j < r; ++j)
    if (!inside[j]) e(n, j) = 1;
  RationalVector b = RationalVector::Zero(n + 1);
  b(n) = 1;
  return !brute_force_feasible(e, b).has_value();
}

/// Transitive closure by repeated squaring of the reachability relation.
inline bool reachability_strongly_connected(Index vertices,
                                            const std::vector<std::pair<Index, Index>>& arcs) {
  if (vertices == 0) return false;
  std::vector<std::vector<bool>> reach(vertices, std::vector<bool>(vertices, false));
  for (Index v = 0; v < vertices; ++v) reach[v][v] = true;
  for (auto [u, v] : arcs) reach[u][v] = true;
  for (Index k = 0; k < vertices; ++k)
    for (Index i = 0; i < vertices; ++i)
      if (reach[i][k])
        for (Index j = 0; j < vertices; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (Index i = 0; i < vertices; ++i)
    for (Index j = 0; j < vertices; ++j)
      if (!reach[i][j]) return false;
  return true;
}

/// Classical irreducibility of a nonnegative matrix: (I + B)^(n-1) > 0.
inline bool classically_irreducible(const RationalMatrix& b) {
  const Index n = b.rows();
  RationalMatrix step = RationalMatrix::Identity(n, n) + b;
  RationalMatrix power = RationalMatrix::Identity(n, n);
  for (Index k = 1; k < n; ++k) power = power * step;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (power(i, j) <= 0) return false;
  return true;
}

/// Random pointed cone with integer generators in [-2, 2]; retries until
/// construction succeeds.
inline PolyhedralCone random_pointed_cone(std::mt19937_64& rng, Index n, Index k) {
  std::uniform_int_distribution<long> entry(-2, 2);
  for (;;) {
    RationalMatrix g(n, k);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < k; ++j) g(i, j) = Rational(entry(rng));
    try {
      return PolyhedralCone(g);
    } catch (const std::invalid_argument&) {
    }
  }
}

inline std::vector<std::vector<Index>> index_sets(const std::vector<Face>& fs) {
  std::vector<std::vector<Index>> out;
  for (const auto& f : fs) out.push_back(f.extremal_index_set);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace conirr::test
