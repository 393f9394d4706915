#pragma once

#include "ehrspan/numeric.hpp"
#include "ehrspan/polytope.hpp"

#include <utility>

namespace ehrspan {

/// Row-style Hermite normal form H = U · M with unimodular U: upper
/// echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot).
struct HermiteForm {
  IntMat h;
  IntMat u;
};

/// Smith normal form S = U · M · V with unimodular U, V. The diagonal is
/// the divisor chain d_1 | d_2 | ... | d_r (trailing zeros for rank
/// deficiency).
struct SmithForm {
  IntVec diagonal;
  IntMat left;    // U
  IntMat right;   // V
  std::pair<long long, long long> source_shape;
};

/// Index data of the lattice L ⊆ Z^{d+1} generated by the height-1
/// embeddings (1, p) of the lattice points p of a full-dimensional
/// polytope. The index is finite and equals the product of the d+1
/// Smith divisors; index 1 means the lattice points affinely generate
/// the whole of Z^d.
struct PointLatticeInfo {
  Int index;
  IntVec snf_diagonal;
  IntMat basis_of_l;   // d+1 independent generators of L
};

HermiteForm hermite_normal_form(const IntMat& m);

SmithForm smith_normal_form(const IntMat& m);

PointLatticeInfo spanning_index(const LatticePolytope& p);

/// The same polytope re-read against the affine lattice its own lattice
/// points generate: vertices are rewritten in a basis of that lattice
/// (anchored at the lexicographically smallest lattice point). The result
/// always has spanning index 1 and is canonical only up to unimodular
/// equivalence — compare h*-vectors, not coordinates.
LatticePolytope coarsen(const LatticePolytope& p);

}  // namespace ehrspan
