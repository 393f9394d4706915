#pragma once

// Shared brute-force oracles for the test suite. Everything here is
// written for transparency over speed and deliberately avoids the
// production shortcuts (interval arithmetic, incremental sum sets,
// fraction-free elimination) so that agreement is meaningful.

#include "ehrspan/constructions.hpp"
#include "ehrspan/linalg.hpp"
#include "ehrspan/numeric.hpp"
#include "ehrspan/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using ehrspan::Int;
using ehrspan::IntMat;
using ehrspan::IntVec;
using ehrspan::Rat;
using ehrspan::RatMat;
using ehrspan::RatVec;

// Membership of x in k·(simplex) via barycentric coordinates: solve
// Σ λ_i (1, v_i) = (k, x) and demand λ ≥ 0. Independent of the facet
// machinery entirely.
inline bool simplex_contains(const ehrspan::LatticePolytope& simplex, const IntVec& x,
                             const Int& k) {
  std::size_t d = static_cast<std::size_t>(simplex.dim());
  const auto& verts = simplex.vertices();
  if (verts.size() != d + 1) throw std::logic_error("oracle needs a simplex");
  IntMat m(d + 1, IntVec(d + 1));
  IntVec b(d + 1);
  for (std::size_t col = 0; col <= d; ++col) {
    m[0][col] = 1;
    for (std::size_t row = 0; row < d; ++row) m[row + 1][col] = verts[col][row];
  }
  b[0] = k;
  for (std::size_t row = 0; row < d; ++row) b[row + 1] = x[row];
  RatVec lambda = ehrspan::solve_linear(m, b);
  return std::all_of(lambda.begin(), lambda.end(), [](const Rat& l) { return l >= 0; });
}

// Count of k·(simplex) ∩ Z^d by scanning the full bounding box with the
// barycentric membership test.
inline Int simplex_dilate_count(const ehrspan::LatticePolytope& simplex, const Int& k) {
  std::size_t d = static_cast<std::size_t>(simplex.dim());
  IntVec lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = hi[i] = k * simplex.vertices()[0][i];
    for (const IntVec& v : simplex.vertices()) {
      lo[i] = std::min(lo[i], k * v[i]);
      hi[i] = std::max(hi[i], k * v[i]);
    }
  }
  Int count = 0;
  IntVec x(d);
  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (level == d) {
      if (simplex_contains(simplex, x, k)) ++count;
      return;
    }
    for (Int c = lo[level]; c <= hi[level]; ++c) {
      x[level] = c;
      self(self, level + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// All k-fold multiset sums of the given points, by direct recursion over
// combinations with repetition (NOT the incremental construction).
inline std::set<IntVec> multiset_sums(const std::vector<IntVec>& points, long long k) {
  std::set<IntVec> out;
  IntVec acc(points.empty() ? 0 : points[0].size(), 0);
  auto rec = [&](auto&& self, std::size_t start, long long remaining) -> void {
    if (remaining == 0) {
      out.insert(acc);
      return;
    }
    for (std::size_t i = start; i < points.size(); ++i) {
      for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += points[i][c];
      self(self, i, remaining - 1);
      for (std::size_t c = 0; c < acc.size(); ++c) acc[c] -= points[i][c];
    }
  };
  rec(rec, 0, k);
  return out;
}

// Plain Gauss–Jordan rank over the rationals, divisions and all — the
// anti-style of the fraction-free production code.
inline long long gauss_rank(RatMat m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Rat p = m[rank][c];
    for (std::size_t j = 0; j < cols; ++j) m[rank][j] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

// Coefficient-wise polynomial product of two integer coefficient lists.
inline IntVec poly_mul(const IntVec& a, const IntVec& b) {
  IntVec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Random unimodular matrix: a product of elementary row additions and
// swaps applied to the identity. det is ±1 by construction.
inline IntMat random_unimodular(long long d, ehrspan::SplitMix64& rng) {
  IntMat u = ehrspan::identity_matrix(d);
  std::size_t n = static_cast<std::size_t>(d);
  for (int step = 0; step < 3 * d; ++step) {
    std::size_t i = rng.bounded(n), j = rng.bounded(n);
    if (i == j) continue;
    long long c = static_cast<long long>(rng.bounded(5)) - 2;
    for (std::size_t col = 0; col < n; ++col) u[i][col] += Int(c) * u[j][col];
  }
  return u;
}

// det ±1 check for HNF/SNF transform matrices.
inline bool is_unimodular(const IntMat& u) {
  Int d = ehrspan::determinant(u);
  return d == 1 || d == -1;
}

}  // namespace oracle
