#pragma once

#include "ehrspan/numeric.hpp"

#include <string>
#include <vector>

namespace ehrspan {

/// One facet inequality {x : <normal, x> <= offset} with primitive normal.
struct Facet {
  IntVec normal;
  Int offset;

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// Complete irredundant facet list, sorted lexicographically by
/// (normal, offset). The intersection of the halfspaces is the polytope.
struct HalfspaceRep {
  std::vector<Facet> facets;
};

/// Rank of the difference vectors {p_i - p_0}, in exact arithmetic.
/// Throws std::invalid_argument("no points") on empty input.
long long affine_dimension(const std::vector<IntVec>& points);

/// A full-dimensional lattice polytope, stored as its exact vertex set.
///
/// Construction normalizes the input point list: exact duplicates and
/// non-vertex points are dropped and recorded in the warning channel.
/// Inputs that do not affinely span the ambient space are rejected with
/// std::invalid_argument("degenerate polytope").
class LatticePolytope {
 public:
  LatticePolytope(long long ambient_dim, std::vector<IntVec> points);

  long long dim() const { return dim_; }
  /// Vertices in ascending lexicographic order; every entry is a true
  /// vertex of the convex hull.
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const HalfspaceRep& facets() const { return facets_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  long long dim_;
  std::vector<IntVec> vertices_;
  HalfspaceRep facets_;
  std::vector<std::string> warnings_;
};

const HalfspaceRep& facet_representation(const LatticePolytope& p);

/// The set kP ∩ Z^d in ascending lexicographic order. k = 0 yields the
/// single point 0·P = {0}.
std::vector<IntVec> lattice_points_in_dilate(const LatticePolytope& p, const Int& k);

/// |kP ∩ Z^d| without materializing the point set.
Int count_lattice_points(const LatticePolytope& p, const Int& k);

/// Lattice points satisfying every facet inequality strictly.
std::vector<IntVec> interior_lattice_points(const LatticePolytope& p);
bool has_interior_lattice_point(const LatticePolytope& p);

/// Vertex-wise image {U v + t}. For |det U| = 1 this is a lattice
/// equivalence and preserves all Ehrhart data.
LatticePolytope apply_affine_map(const LatticePolytope& p, const IntMat& u, const IntVec& t);

}  // namespace ehrspan
