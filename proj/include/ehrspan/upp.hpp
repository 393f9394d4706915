#pragma once

#include "ehrspan/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ehrspan {

/// Graded coordinate ring data of a weighted projective space with n
/// variables of degree 1 and r further variables of degrees a_j ≥ 2.
/// n ≥ 1 is required throughout: the forbidden locus {x_1 = ... = x_n = 0}
/// must be a proper subspace for point normalization to make sense.
struct WeightedSpace {
  long long n = 1;
  std::vector<long long> weights;  // a_1..a_r, each >= 2

  long long total_vars() const { return n + static_cast<long long>(weights.size()); }
};

/// A point of the weighted projective space, stored as the canonical
/// representative: the weighted rescaling x_i ↦ λx_i, y_j ↦ λ^{a_j} y_j
/// that makes the first nonzero weight-1 coordinate equal to 1. Two
/// points are projectively equal iff their canonical coordinates match.
struct ProjectivePoint {
  RatVec coords;
};

/// A finite set of pairwise distinct points avoiding the forbidden locus.
struct ProjectivePointSet {
  WeightedSpace space;
  std::vector<ProjectivePoint> points;
};

/// Canonicalize raw coordinates. Throws std::invalid_argument when the
/// first n coordinates are all zero (the point would lie inside the
/// forbidden locus, or be no point at all).
ProjectivePoint normalize_point(const WeightedSpace& space, RatVec raw);

/// Build a point set from raw coordinate rows; points are canonicalized
/// and projective duplicates are rejected with std::invalid_argument.
ProjectivePointSet make_point_set(WeightedSpace space, std::vector<RatVec> raw_points);

/// All exponent vectors (u_1..u_n, v_1..v_r) with Σu_i + Σ a_j·v_j = ℓ,
/// ascending lexicographic. ℓ = 0 yields the single constant monomial.
std::vector<std::vector<long long>> weighted_monomial_basis(const WeightedSpace& space,
                                                            long long ell);

/// Rows = weighted monomials of degree ℓ, columns = points, entries =
/// exact evaluations. Exposed separately from hilbert_function so callers
/// can evaluate at arbitrary (non-canonical) representatives.
RatMat evaluation_matrix(const WeightedSpace& space, const std::vector<RatVec>& raw_points,
                         long long ell);

/// h_Γ(ℓ): rank of the evaluation matrix over the rationals.
long long hilbert_function(const ProjectivePointSet& gamma, long long ell);

/// Least ℓ with h_Γ(ℓ) = |Γ|. Exists for every valid point set; the
/// search is capped generously and throws std::runtime_error on overrun
/// (which would indicate an invariant violation, not slow convergence).
long long stabilization_degree(const ProjectivePointSet& gamma);

/// Counterexample data for a failed uniform-position test: two equal-size
/// subsets (as index lists into the point set) whose Hilbert functions
/// first differ at `degree`.
struct UppWitness {
  long long degree;
  std::vector<std::size_t> subset_a;
  std::vector<std::size_t> subset_b;
};

struct UppResult {
  bool uniform;
  std::optional<UppWitness> witness;
};

/// Exhaustive uniform-position test per the subset definition: all
/// same-cardinality subsets must share their Hilbert function. Degrees
/// are only scanned up to the stabilization degree ℓ_0 — beyond it every
/// subset Hilbert function is pinned at the subset size, so higher
/// degrees carry no information. Sets larger than 12 points are refused
/// with std::invalid_argument("exhaustive bound exceeded").
UppResult is_uniform_position(const ProjectivePointSet& gamma);

/// One instance of the superadditivity bound
/// h_Γ(i+j) ≥ min(#Γ, h_Γ(i) + h_Γ(j) − 1), evaluated exactly.
struct UppBoundReport {
  bool pass;
  long long i, j;
  long long h_i, h_j, h_sum;  // h_sum = h_Γ(i+j)
  long long bound;            // min(#Γ, h_i + h_j − 1)
  long long set_size;
};

/// Requires Γ in uniform position (the bound is only claimed there);
/// otherwise throws std::invalid_argument("hypothesis violated").
UppBoundReport check_upp_bound(const ProjectivePointSet& gamma, long long i, long long j);

struct MinFormulaWitness {
  std::vector<std::size_t> subset;
  long long degree;
  long long actual;    // h_{Γ'}(degree)
  long long expected;  // min(h_Γ(degree), |Γ'|)
};

/// Side-by-side verdicts of the subset definition and the min-formula
/// characterization h_{Γ'} = min(h_Γ, #Γ'); the two must agree.
struct MinFormulaReport {
  bool uniform;            // subset definition
  bool min_formula_holds;  // min-formula, all subsets and degrees ≤ ℓ_0
  bool equivalent;         // uniform == min_formula_holds
  std::optional<MinFormulaWitness> witness;  // first min-formula failure
};

/// Exhaustive over all subsets; sets larger than 10 points are refused
/// with std::invalid_argument("exhaustive bound exceeded").
MinFormulaReport check_min_formula(const ProjectivePointSet& gamma);

/// Seeded random configuration: `count` distinct points with numerators
/// in [−bound, bound] and denominators in {1, 2}, redrawn on collision or
/// forbidden-locus hits; gives up after 1000 attempts per point with
/// std::runtime_error("degenerate draw").
ProjectivePointSet random_point_set(const WeightedSpace& space, long long count,
                                    std::uint64_t seed, long long bound = 3);

}  // namespace ehrspan
