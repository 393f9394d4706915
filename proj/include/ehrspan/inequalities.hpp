#pragma once

#include "ehrspan/ehrhart.hpp"
#include "ehrspan/numeric.hpp"
#include "ehrspan/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ehrspan {

/// One failed instance of an inequality family: the parameter values it
/// failed at plus both sides, so the claim lhs ≤ rhs is recomputable from
/// the h*-vector alone.
struct Violation {
  std::map<std::string, long long> params;  // keys "i" and/or "j"
  Int lhs;
  Int rhs;
};

/// Result of checking one inequality family against one h*-vector.
/// Families whose hypotheses are conditional (hibi needs an interior
/// lattice point, no_internal_zeros needs a spanning polytope) report
/// applicable = false and pass vacuously when the hypothesis fails.
struct InequalityReport {
  std::string family;  // stanley | strong | hibi | spc_i1 | no_internal_zeros
  bool pass;
  bool applicable;
  std::vector<Violation> violations;  // ALL violations, not just the first
  long long degree;
  long long dim;
  std::optional<bool> spanning;  // known only when a polytope was given
};

/// Unconditional palindromic partial-sum bound: for 0 ≤ i ≤ ⌊s/2⌋,
/// h*_0 + ... + h*_i ≤ h*_{s−i} + ... + h*_s.
InequalityReport check_stanley(const HStarVector& h);

/// Consecutive-window bound for spanning polytopes: for every i ≥ 1,
/// j ≥ 0 with i + j < s, h*_1 + ... + h*_i ≤ h*_{j+1} + ... + h*_{j+i}.
/// Callers may feed any h*-vector (the hypothesis is not checkable from
/// h* alone); on non-spanning input the family can genuinely fail.
InequalityReport check_strong(const HStarVector& h);

/// The three pointwise lower-bound families, each against the same
/// polytope: h*_1 ≤ h*_j for 1 ≤ j < deg of the coarsened polytope
/// (spc_i1, unconditional); h*_1 ≤ h*_j for 1 ≤ j < d when an interior
/// lattice point exists (hibi); h*_j ≥ 1 for 0 ≤ j ≤ s when the
/// polytope is spanning (no_internal_zeros).
std::vector<InequalityReport> check_lower_bounds(const LatticePolytope& p);

}  // namespace ehrspan
