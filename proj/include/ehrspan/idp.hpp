#pragma once

#include "ehrspan/numeric.hpp"
#include "ehrspan/polytope.hpp"

#include <optional>
#include <utility>

namespace ehrspan {

/// Outcome of an integer-decomposition check. When is_idp is false the
/// counterexample holds the first failing dilation factor k and the
/// lexicographically smallest point of kP ∩ Z^d that is not a sum of k
/// lattice points of P; checked_up_to is then that k, otherwise the full
/// verification bound.
struct IdpVerdict {
  bool is_idp;
  long long checked_up_to;
  std::optional<std::pair<long long, IntVec>> counterexample;
};

/// Decide whether every lattice point of kP decomposes as a sum of k
/// lattice points of P, for k = 2..k_max. Works incrementally: the sum
/// set S_k = S_{k-1} + (P ∩ Z^d) is compared against kP ∩ Z^d, so a
/// failed comparison directly exhibits an undecomposable point.
///
/// The default bound k_max = max(2, d−1) suffices to decide the property
/// outright (semigroup generation degrees); pass a larger bound to extend
/// the certified range. k_max < 2 throws
/// std::invalid_argument("trivial range").
IdpVerdict is_idp(const LatticePolytope& p);
IdpVerdict is_idp(const LatticePolytope& p, long long k_max);

}  // namespace ehrspan
