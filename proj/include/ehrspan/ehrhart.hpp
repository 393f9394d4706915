#pragma once

#include "ehrspan/numeric.hpp"
#include "ehrspan/polytope.hpp"

namespace ehrspan {

/// Exact counting polynomial of a full-dimensional lattice polytope:
/// coefficients[i] is the coefficient of t^i, so coefficients.size() = d+1.
/// The constant term is 1 and d! times the leading coefficient is the
/// normalized volume.
struct EhrhartPolynomial {
  RatVec coefficients;

  Rat evaluate(const Rat& t) const;
  /// Evaluation at a nonnegative integer; the result is always integral.
  Int evaluate_integer(const Int& k) const;
};

/// The h*-vector of a full-dimensional lattice polytope, stored at full
/// length d+1 with explicit trailing zeros so that downstream checks can
/// index freely up to the degree.
struct HStarVector {
  IntVec coeffs;            // h*_0 .. h*_d, all nonnegative, h*_0 = 1
  long long degree;         // max{i : h*_i != 0}
  long long dim;            // d
  Int normalized_volume;    // sum of the entries = d! * vol(P)
};

/// The exact dilate counts (|0P ∩ Z^d|, ..., |dP ∩ Z^d|); extra entries
/// up to k_max when requested.
IntVec ehrhart_counts(const LatticePolytope& p);
IntVec ehrhart_counts(const LatticePolytope& p, long long k_max);

/// Unique degree-d polynomial through the nodes (k, |kP ∩ Z^d|), k = 0..d,
/// solved exactly over the rationals. The result is re-checked against
/// direct counts at k = d+1 and d+2; a mismatch throws
/// std::runtime_error("interpolation mismatch") since it can only mean a
/// counting bug, never bad input.
EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p);

/// h*_i = Σ_{j=0}^{i} (−1)^j · C(d+1, j) · ehr_P(i−j). Entries are
/// verified nonnegative (a theorem for lattice polytopes); a negative
/// entry throws std::runtime_error("h* transform failed").
HStarVector hstar_vector(const LatticePolytope& p);

/// Same transform applied to precomputed counts (ehr(0..d)); used where
/// the counts are already on hand.
HStarVector hstar_from_counts(const IntVec& counts);

}  // namespace ehrspan
