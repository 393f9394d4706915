#include "ehrspan/upp.hpp"

#include "ehrspan/constructions.hpp"  // SplitMix64
#include "ehrspan/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehrspan {

namespace {

constexpr long long kStabilizationCap = 1000;

void validate_space(const WeightedSpace& space) {
  if (space.n < 1) throw std::invalid_argument("need at least one weight-1 variable");
  for (long long a : space.weights)
    if (a < 2) throw std::invalid_argument("extra weights must be at least 2");
}

Rat rat_pow(const Rat& base, long long e) {
  Rat acc = 1;
  for (long long i = 0; i < e; ++i) acc *= base;
  return acc;
}

// All subsets of {0..n-1} of size t, ascending lexicographic index lists.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(t);
  for (std::size_t i = 0; i < t; ++i) cur[i] = i;
  if (t > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = t;
    while (i > 0 && cur[i - 1] == n - t + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < t; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Rank of the column-submatrix of m selected by `cols`.
long long column_rank(const RatMat& m, const std::vector<std::size_t>& cols) {
  RatMat sub(m.size(), RatVec(cols.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = m[i][cols[j]];
  return rank_of(sub);
}

std::vector<RatVec> coordinate_rows(const ProjectivePointSet& gamma) {
  std::vector<RatVec> rows;
  rows.reserve(gamma.points.size());
  for (const ProjectivePoint& p : gamma.points) rows.push_back(p.coords);
  return rows;
}

}  // namespace

ProjectivePoint normalize_point(const WeightedSpace& space, RatVec raw) {
  validate_space(space);
  if (static_cast<long long>(raw.size()) != space.total_vars())
    throw std::invalid_argument("coordinate count does not match the weighted space");

  std::size_t n = static_cast<std::size_t>(space.n);
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == n)
    throw std::invalid_argument("point has no nonzero weight-1 coordinate");

  Rat lambda = Rat(1) / raw[pivot];
  for (std::size_t i = 0; i < n; ++i) raw[i] *= lambda;
  for (std::size_t j = 0; j < space.weights.size(); ++j)
    raw[n + j] *= rat_pow(lambda, space.weights[j]);
  return ProjectivePoint{std::move(raw)};
}

ProjectivePointSet make_point_set(WeightedSpace space, std::vector<RatVec> raw_points) {
  validate_space(space);
  ProjectivePointSet gamma{std::move(space), {}};
  gamma.points.reserve(raw_points.size());
  for (RatVec& raw : raw_points) {
    ProjectivePoint p = normalize_point(gamma.space, std::move(raw));
    for (const ProjectivePoint& q : gamma.points)
      if (q.coords == p.coords)
        throw std::invalid_argument("duplicate projective point");
    gamma.points.push_back(std::move(p));
  }
  return gamma;
}

std::vector<std::vector<long long>> weighted_monomial_basis(const WeightedSpace& space,
                                                            long long ell) {
  validate_space(space);
  if (ell < 0) throw std::invalid_argument("degree must be nonnegative");

  std::vector<long long> degs(static_cast<std::size_t>(space.n), 1);
  degs.insert(degs.end(), space.weights.begin(), space.weights.end());

  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(degs.size(), 0);
  // Ascending lex: the exponent at each position counts up from 0; the
  // final position must absorb the remaining degree exactly.
  auto rec = [&](auto&& self, std::size_t pos, long long left) -> void {
    if (pos + 1 == degs.size()) {
      if (left % degs[pos] == 0) {
        cur[pos] = left / degs[pos];
        out.push_back(cur);
      }
      return;
    }
    for (long long e = 0; e * degs[pos] <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e * degs[pos]);
    }
  };
  rec(rec, 0, ell);
  return out;
}

RatMat evaluation_matrix(const WeightedSpace& space, const std::vector<RatVec>& raw_points,
                         long long ell) {
  auto basis = weighted_monomial_basis(space, ell);
  RatMat m(basis.size(), RatVec(raw_points.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < raw_points.size(); ++j) {
      Rat v = 1;
      for (std::size_t c = 0; c < basis[i].size(); ++c)
        if (basis[i][c] != 0) v *= rat_pow(raw_points[j][c], basis[i][c]);
      m[i][j] = std::move(v);
    }
  return m;
}

long long hilbert_function(const ProjectivePointSet& gamma, long long ell) {
  if (gamma.points.empty()) throw std::invalid_argument("no points");
  return rank_of(evaluation_matrix(gamma.space, coordinate_rows(gamma), ell));
}

long long stabilization_degree(const ProjectivePointSet& gamma) {
  long long size = static_cast<long long>(gamma.points.size());
  for (long long ell = 0; ell <= kStabilizationCap; ++ell)
    if (hilbert_function(gamma, ell) == size) return ell;
  throw std::runtime_error("stabilization cap exceeded");
}

UppResult is_uniform_position(const ProjectivePointSet& gamma) {
  std::size_t size = gamma.points.size();
  if (size > 12) throw std::invalid_argument("exhaustive bound exceeded");
  if (size <= 1) return UppResult{true, std::nullopt};

  long long ell0 = stabilization_degree(gamma);
  auto rows = coordinate_rows(gamma);

  // One evaluation matrix per degree; subset Hilbert values are column
  // ranks of these shared matrices.
  std::vector<RatMat> mats;
  for (long long ell = 1; ell <= ell0; ++ell)
    mats.push_back(evaluation_matrix(gamma.space, rows, ell));

  for (std::size_t t = 1; t < size; ++t) {
    auto subsets = subsets_of_size(size, t);
    std::vector<long long> reference;  // Hilbert profile of subsets[0]
    for (const RatMat& m : mats) reference.push_back(column_rank(m, subsets[0]));
    for (std::size_t k = 1; k < subsets.size(); ++k) {
      for (std::size_t e = 0; e < mats.size(); ++e) {
        long long h = column_rank(mats[e], subsets[k]);
        if (h != reference[e])
          return UppResult{false,
                           UppWitness{static_cast<long long>(e) + 1, subsets[0], subsets[k]}};
      }
    }
  }
  return UppResult{true, std::nullopt};
}

UppBoundReport check_upp_bound(const ProjectivePointSet& gamma, long long i, long long j) {
  if (i < 0 || j < 0) throw std::invalid_argument("degrees must be nonnegative");
  if (!is_uniform_position(gamma).uniform)
    throw std::invalid_argument("hypothesis violated");

  UppBoundReport rep;
  rep.i = i;
  rep.j = j;
  rep.set_size = static_cast<long long>(gamma.points.size());
  rep.h_i = hilbert_function(gamma, i);
  rep.h_j = hilbert_function(gamma, j);
  rep.h_sum = hilbert_function(gamma, i + j);
  rep.bound = std::min(rep.set_size, rep.h_i + rep.h_j - 1);
  rep.pass = rep.h_sum >= rep.bound;
  return rep;
}

MinFormulaReport check_min_formula(const ProjectivePointSet& gamma) {
  std::size_t size = gamma.points.size();
  if (size > 10) throw std::invalid_argument("exhaustive bound exceeded");

  MinFormulaReport rep;
  rep.uniform = is_uniform_position(gamma).uniform;
  rep.min_formula_holds = true;
  rep.witness = std::nullopt;

  long long ell0 = stabilization_degree(gamma);
  auto rows = coordinate_rows(gamma);
  for (long long ell = 1; ell <= ell0 && rep.min_formula_holds; ++ell) {
    RatMat m = evaluation_matrix(gamma.space, rows, ell);
    long long h_full = rank_of(m);
    for (std::size_t t = 1; t <= size && rep.min_formula_holds; ++t) {
      for (const auto& subset : subsets_of_size(size, t)) {
        long long actual = column_rank(m, subset);
        long long expected = std::min(h_full, static_cast<long long>(t));
        if (actual != expected) {
          rep.min_formula_holds = false;
          rep.witness = MinFormulaWitness{subset, ell, actual, expected};
          break;
        }
      }
    }
  }
  rep.equivalent = (rep.uniform == rep.min_formula_holds);
  return rep;
}

ProjectivePointSet random_point_set(const WeightedSpace& space, long long count,
                                    std::uint64_t seed, long long bound) {
  validate_space(space);
  if (count < 1) throw std::invalid_argument("need at least one point");
  if (bound < 1) throw std::invalid_argument("coordinate bound must be positive");

  SplitMix64 rng(seed);
  ProjectivePointSet gamma{space, {}};
  std::size_t vars = static_cast<std::size_t>(space.total_vars());

  for (long long k = 0; k < count; ++k) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      RatVec raw(vars);
      for (Rat& c : raw) {
        long long num = static_cast<long long>(rng.bounded(2 * bound + 1)) - bound;
        long long den = 1 + static_cast<long long>(rng.bounded(2));
        c = Rat(Int(num), Int(den));
      }
      bool has_unit = false;
      for (long long i = 0; i < space.n; ++i)
        if (raw[static_cast<std::size_t>(i)] != 0) has_unit = true;
      if (!has_unit) continue;
      ProjectivePoint p = normalize_point(space, std::move(raw));
      bool dup = false;
      for (const ProjectivePoint& q : gamma.points)
        if (q.coords == p.coords) dup = true;
      if (dup) continue;
      gamma.points.push_back(std::move(p));
      placed = true;
    }
    if (!placed) throw std::runtime_error("degenerate draw");
  }
  return gamma;
}

}  // namespace ehrspan
