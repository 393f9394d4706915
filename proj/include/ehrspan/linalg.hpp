#pragma once

#include "ehrspan/numeric.hpp"

namespace ehrspan {

IntMat identity_matrix(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& x);
IntMat transpose(const IntMat& m);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
long long rank_of(IntMat m);

/// Rank of a rational matrix: rows are scaled to integers first
/// (row scaling by a nonzero rational preserves rank).
long long rank_of(const RatMat& m);

/// Determinant of a square integer matrix (Bareiss).
Int determinant(IntMat m);

/// Exact solution of A x = b for square nonsingular integer A (Cramer with
/// Bareiss determinants). Throws std::invalid_argument on a singular matrix.
RatVec solve_linear(const IntMat& a, const IntVec& b);

/// One exact solution of a consistent linear system over the rationals,
/// free variables set to zero. Throws std::invalid_argument when the
/// system is inconsistent.
RatVec solve_any(const RatMat& a, const RatVec& b);

}  // namespace ehrspan
