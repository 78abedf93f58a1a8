#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "conirr/errors.hpp"
#include "conirr/rational.hpp"

namespace conirr {

/// A face of a polyhedral cone, identified by the extremal generators it
/// contains. Indices refer to columns of the generator matrix the cone was
/// built from (0-based; serializers print them 1-based).
struct Face {
  std::vector<Index> extremal_index_set;  ///< sorted
  RationalMatrix span_basis;              ///< independent subset of the face's extremal vectors
  Index dim = 0;
  bool trivial = false;  ///< {0} or the whole cone
  /// h with h.x == 0 on the face and h.x > 0 on every extremal outside it.
  /// Zero for the whole cone.
  RationalVector support;

  bool operator==(const Face& other) const {
    return extremal_index_set == other.extremal_index_set;
  }
};

inline constexpr std::size_t kDefaultFaceLimit = std::size_t{1} << 20;

/// Finitely generated closed convex pointed cone {G z : z >= 0}.
///
/// Construction canonicalizes and prunes the generators, rejects cones that
/// contain a line, and computes facet normals inside span(K) by the double
/// description method. The face lattice is enumerated lazily, exactly once.
class PolyhedralCone {
 public:
  explicit PolyhedralCone(const RationalMatrix& generators,
                          std::size_t face_limit = kDefaultFaceLimit);

  Index ambient_dim() const;
  /// The generator matrix as supplied.
  const RationalMatrix& generators() const;
  /// Generator columns (ascending) that span distinct extremal rays.
  const std::vector<Index>& extremal_indices() const;
  /// n x r; column k is generator extremal_indices()[k] as a primitive
  /// integer vector.
  const RationalMatrix& extremal_rays() const;
  /// One row per facet; h.x >= 0 on the cone.
  const RationalMatrix& facet_normals() const;
  /// Dimension of span(K).
  Index dim() const;
  std::size_t face_limit() const;

  /// Sorted by dimension, then lexicographically by index set. Includes the
  /// trivial faces. Throws FaceCountLimit when the lattice is too large.
  const std::vector<Face>& faces() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

PolyhedralCone cone_from_generators(const RationalMatrix& generators,
                                    std::size_t face_limit = kDefaultFaceLimit);

/// The nonnegative orthant, generated by the identity.
PolyhedralCone orthant(Index n, std::size_t face_limit = kDefaultFaceLimit);

struct Pointedness {
  bool pointed = false;
  RationalVector witness;  ///< p with p.g >= 1 for every nonzero generator g
};

/// Zero columns are ignored.
Pointedness is_pointed(const RationalMatrix& generators);

bool contains(const PolyhedralCone& cone, const RationalVector& x);
bool is_solid(const PolyhedralCone& cone);
const std::vector<Face>& faces(const PolyhedralCone& cone);
std::vector<Face> nontrivial_faces(const PolyhedralCone& cone);
std::vector<Face> maximal_nontrivial_faces(const PolyhedralCone& cone);

/// Position of a generator index inside extremal_indices(), or -1.
Index extremal_position(const PolyhedralCone& cone, Index generator_index);

/// The extremal rays (columns of extremal_rays()) belonging to a face.
RationalMatrix face_rays(const PolyhedralCone& cone, const Face& face);

}  // namespace conirr
