#include "conirr/cone.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "conirr/linalg.hpp"
#include "conirr/lp.hpp"

namespace conirr {

namespace {

using IndexSet = std::vector<Index>;  // sorted positions into the extremal list

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool cone_contains(const RationalMatrix& rays, const RationalVector& x) {
  LpProblem p{rays, x, std::vector<bool>(static_cast<std::size_t>(rays.cols()), true)};
  return lp_feasible(p).feasible;
}

// Inverse of a square nonsingular matrix by Gauss-Jordan.
RationalMatrix inverse(const RationalMatrix& m) {
  const Index d = m.rows();
  RationalMatrix aug(d, 2 * d);
  aug << m, RationalMatrix::Identity(d, d);
  auto [red, pivots] = rref<Rational>(std::move(aug));
  return red.rightCols(d);
}

struct DdRay {
  RationalVector h;
  std::vector<bool> tight;  // over constraints added so far
};

// Extreme rays of {h : C^T h >= 0} for a d x r matrix C of full row rank
// whose columns `unit` are the standard basis vectors e_0..e_{d-1}.
std::vector<RationalVector> double_description(const RationalMatrix& c,
                                               const std::vector<Index>& unit) {
  const Index d = c.rows();
  const Index r = c.cols();

  std::vector<Index> order = unit;
  for (Index j = 0; j < r; ++j)
    if (std::find(unit.begin(), unit.end(), j) == unit.end()) order.push_back(j);

  // Initial cone: the orthant cut out by the unit constraints.
  std::vector<DdRay> rays;
  for (Index k = 0; k < d; ++k) {
    DdRay ray{RationalVector::Unit(d, k), std::vector<bool>(static_cast<std::size_t>(d), true)};
    ray.tight[static_cast<std::size_t>(k)] = false;
    rays.push_back(std::move(ray));
  }

  for (std::size_t step = static_cast<std::size_t>(d); step < order.size(); ++step) {
    const RationalVector a = c.col(order[step]);
    std::vector<Rational> val(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k) val[k] = a.dot(rays[k].h);

    std::vector<DdRay> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] < 0) continue;
      DdRay kept = rays[k];
      kept.tight.push_back(val[k] == 0);
      next.push_back(std::move(kept));
    }
    for (std::size_t pi = 0; pi < rays.size(); ++pi) {
      if (val[pi] <= 0) continue;
      for (std::size_t ni = 0; ni < rays.size(); ++ni) {
        if (val[ni] >= 0) continue;
        std::vector<bool> common(step);
        std::size_t count = 0;
        for (std::size_t t = 0; t < step; ++t) {
          common[t] = rays[pi].tight[t] && rays[ni].tight[t];
          count += common[t];
        }
        if (static_cast<Index>(count) + 2 < d) continue;
        // Combinatorial adjacency: no third ray is tight on all common constraints.
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == pi || o == ni) continue;
          bool covers = true;
          for (std::size_t t = 0; t < step && covers; ++t)
            if (common[t] && !rays[o].tight[t]) covers = false;
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        RationalVector h = primitive_integer(val[pi] * rays[ni].h - val[ni] * rays[pi].h);
        common.push_back(true);
        next.push_back(DdRay{std::move(h), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<RationalVector> out;
  for (auto& ray : rays) out.push_back(std::move(ray.h));
  return out;
}

}  // namespace

struct PolyhedralCone::Data {
  RationalMatrix generators;
  std::vector<Index> extremal_indices;
  RationalMatrix rays;
  RationalMatrix facet_normals;
  std::vector<IndexSet> facet_tight;  // positions into rays
  Index dim = 0;
  std::size_t face_limit = kDefaultFaceLimit;

  mutable std::once_flag faces_once;
  mutable std::vector<Face> faces;

  void enumerate_faces() const;
  Face make_face(const IndexSet& positions) const;
};

Face PolyhedralCone::Data::make_face(const IndexSet& positions) const {
  Face f;
  for (Index p : positions) f.extremal_index_set.push_back(extremal_indices[p]);
  const RationalMatrix members = select_columns(rays, positions);
  const EchelonInfo ech = bareiss_echelon(members);
  f.dim = ech.rank;
  f.span_basis = select_columns(members, ech.pivot_columns);
  f.trivial = positions.empty() || static_cast<Index>(positions.size()) == rays.cols();
  f.support = RationalVector::Zero(generators.rows());
  for (std::size_t k = 0; k < facet_tight.size(); ++k)
    if (std::includes(facet_tight[k].begin(), facet_tight[k].end(), positions.begin(),
                      positions.end()))
      f.support += facet_normals.row(static_cast<Index>(k)).transpose();
  return f;
}

void PolyhedralCone::Data::enumerate_faces() const {
  IndexSet full(static_cast<std::size_t>(rays.cols()));
  for (Index k = 0; k < rays.cols(); ++k) full[static_cast<std::size_t>(k)] = k;

  // Every face is an intersection of facets; close {K} under intersection.
  std::set<IndexSet> found{full, IndexSet{}};
  std::vector<IndexSet> frontier{full};
  while (!frontier.empty()) {
    std::vector<IndexSet> next;
    for (const auto& f : frontier)
      for (const auto& t : facet_tight) {
        IndexSet g = intersect(f, t);
        if (found.insert(g).second) {
          if (found.size() > face_limit)
            throw FaceCountLimit("face lattice exceeds limit of " + std::to_string(face_limit));
          next.push_back(std::move(g));
        }
      }
    frontier = std::move(next);
  }

  std::vector<Face> out;
  for (const auto& s : found) out.push_back(make_face(s));
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.extremal_index_set < b.extremal_index_set;
  });
  faces = std::move(out);
}

PolyhedralCone::PolyhedralCone(const RationalMatrix& generators, std::size_t face_limit) {
  auto data = std::make_shared<Data>();
  data->generators = generators;
  data->face_limit = face_limit;
  const Index n = generators.rows();

  // Canonical rays; the first occurrence of each direction represents it.
  std::vector<Index> candidates;
  std::vector<RationalVector> canon;
  for (Index j = 0; j < generators.cols(); ++j) {
    const RationalVector g = generators.col(j);
    if (is_zero(g)) continue;
    RationalVector c = primitive_integer(g);
    if (std::find(canon.begin(), canon.end(), c) != canon.end()) continue;
    candidates.push_back(j);
    canon.push_back(std::move(c));
  }
  if (candidates.empty()) throw EmptyGenerators();

  RationalMatrix all(n, static_cast<Index>(canon.size()));
  for (std::size_t k = 0; k < canon.size(); ++k) all.col(static_cast<Index>(k)) = canon[k];
  if (!is_pointed(all).pointed) throw UnpointedCone();

  // In a pointed cone the extremal rays are exactly the irredundant generators.
  std::vector<Index> keep;
  for (Index k = 0; k < all.cols(); ++k) {
    RationalMatrix others(n, all.cols() - 1);
    for (Index j = 0, o = 0; j < all.cols(); ++j)
      if (j != k) others.col(o++) = all.col(j);
    if (others.cols() == 0 || !cone_contains(others, all.col(k))) keep.push_back(k);
  }
  data->rays = select_columns(all, keep);
  for (Index k : keep) data->extremal_indices.push_back(candidates[static_cast<std::size_t>(k)]);

  // Facets, computed in coordinates of span(K).
  const EchelonInfo col_ech = bareiss_echelon(data->rays);
  const Index d = col_ech.rank;
  data->dim = d;
  const RationalMatrix u = select_columns(data->rays, col_ech.pivot_columns);
  const std::vector<Index> rows = bareiss_echelon(RationalMatrix(u.transpose())).pivot_columns;
  RationalMatrix u_rows(d, d);
  RationalMatrix rays_rows(d, data->rays.cols());
  for (Index k = 0; k < d; ++k) {
    u_rows.row(k) = u.row(rows[static_cast<std::size_t>(k)]);
    rays_rows.row(k) = data->rays.row(rows[static_cast<std::size_t>(k)]);
  }
  const RationalMatrix u_inv = inverse(u_rows);
  const RationalMatrix coords = u_inv * rays_rows;

  const std::vector<RationalVector> dual = double_description(coords, col_ech.pivot_columns);
  data->facet_normals.resize(static_cast<Index>(dual.size()), n);
  for (std::size_t f = 0; f < dual.size(); ++f) {
    const RationalVector lifted_rows = u_inv.transpose() * dual[f];
    RationalVector h = RationalVector::Zero(n);
    for (Index k = 0; k < d; ++k) h(rows[static_cast<std::size_t>(k)]) = lifted_rows(k);
    h = primitive_integer(h);
    data->facet_normals.row(static_cast<Index>(f)) = h.transpose();
    IndexSet tight;
    for (Index k = 0; k < data->rays.cols(); ++k)
      if (h.dot(data->rays.col(k)) == 0) tight.push_back(k);
    data->facet_tight.push_back(std::move(tight));
  }
  data_ = std::move(data);
}

Index PolyhedralCone::ambient_dim() const { return data_->generators.rows(); }
const RationalMatrix& PolyhedralCone::generators() const { return data_->generators; }
const std::vector<Index>& PolyhedralCone::extremal_indices() const {
  return data_->extremal_indices;
}
const RationalMatrix& PolyhedralCone::extremal_rays() const { return data_->rays; }
const RationalMatrix& PolyhedralCone::facet_normals() const { return data_->facet_normals; }
Index PolyhedralCone::dim() const { return data_->dim; }
std::size_t PolyhedralCone::face_limit() const { return data_->face_limit; }

const std::vector<Face>& PolyhedralCone::faces() const {
  std::call_once(data_->faces_once, [this] { data_->enumerate_faces(); });
  return data_->faces;
}

PolyhedralCone cone_from_generators(const RationalMatrix& generators, std::size_t face_limit) {
  return PolyhedralCone(generators, face_limit);
}

PolyhedralCone orthant(Index n, std::size_t face_limit) {
  return PolyhedralCone(RationalMatrix::Identity(n, n), face_limit);
}

Pointedness is_pointed(const RationalMatrix& generators) {
  // p free (n variables), slack s >= 0:  G^T p - s = 1.
  std::vector<Index> nonzero;
  for (Index j = 0; j < generators.cols(); ++j)
    if (!is_zero(generators.col(j))) nonzero.push_back(j);
  const Index n = generators.rows();
  const Index k = static_cast<Index>(nonzero.size());
  LpProblem lp;
  lp.equality = RationalMatrix::Zero(k, n + k);
  for (Index i = 0; i < k; ++i) {
    lp.equality.row(i).head(n) = generators.col(nonzero[static_cast<std::size_t>(i)]).transpose();
    lp.equality(i, n + i) = -1;
  }
  lp.rhs = RationalVector::Ones(k);
  lp.nonneg.assign(static_cast<std::size_t>(n), false);
  lp.nonneg.resize(static_cast<std::size_t>(n + k), true);
  const Feasibility f = lp_feasible(lp);
  Pointedness out;
  out.pointed = f.feasible;
  if (f.feasible) out.witness = f.witness.head(n);
  return out;
}

bool contains(const PolyhedralCone& cone, const RationalVector& x) {
  if (x.size() != cone.ambient_dim())
    throw DimensionMismatch("contains: vector length " + std::to_string(x.size()) +
                            " vs ambient dimension " + std::to_string(cone.ambient_dim()));
  return cone_contains(cone.extremal_rays(), x);
}

bool is_solid(const PolyhedralCone& cone) { return cone.dim() == cone.ambient_dim(); }

const std::vector<Face>& faces(const PolyhedralCone& cone) { return cone.faces(); }

std::vector<Face> nontrivial_faces(const PolyhedralCone& cone) {
  std::vector<Face> out;
  for (const Face& f : cone.faces())
    if (!f.trivial) out.push_back(f);
  return out;
}

std::vector<Face> maximal_nontrivial_faces(const PolyhedralCone& cone) {
  const std::vector<Face> nt = nontrivial_faces(cone);
  std::vector<Face> out;
  for (const Face& f : nt) {
    const bool dominated = std::any_of(nt.begin(), nt.end(), [&](const Face& g) {
      return g.extremal_index_set.size() > f.extremal_index_set.size() &&
             std::includes(g.extremal_index_set.begin(), g.extremal_index_set.end(),
                           f.extremal_index_set.begin(), f.extremal_index_set.end());
    });
    if (!dominated) out.push_back(f);
  }
  return out;
}

Index extremal_position(const PolyhedralCone& cone, Index generator_index) {
  const auto& ext = cone.extremal_indices();
  auto it = std::lower_bound(ext.begin(), ext.end(), generator_index);
  if (it == ext.end() || *it != generator_index) return -1;
  return static_cast<Index>(it - ext.begin());
}

RationalMatrix face_rays(const PolyhedralCone& cone, const Face& face) {
  std::vector<Index> pos;
  for (Index g : face.extremal_index_set) pos.push_back(extremal_position(cone, g));
  return select_columns(cone.extremal_rays(), pos);
}

}  // namespace conirr
