#include "ehrspan/inequalities.hpp"

#include "ehrspan/lattice_algebra.hpp"

namespace ehrspan {

namespace {

Int partial_sum(const IntVec& h, long long from, long long to) {
  Int acc = 0;
  for (long long i = from; i <= to; ++i) acc += h[static_cast<std::size_t>(i)];
  return acc;
}

}  // namespace

InequalityReport check_stanley(const HStarVector& h) {
  InequalityReport rep{"stanley", true, true, {}, h.degree, h.dim, std::nullopt};
  long long s = h.degree;
  for (long long i = 0; i <= s / 2; ++i) {
    Int lhs = partial_sum(h.coeffs, 0, i);
    Int rhs = partial_sum(h.coeffs, s - i, s);
    if (lhs > rhs) rep.violations.push_back({{{"i", i}}, lhs, rhs});
  }
  rep.pass = rep.violations.empty();
  return rep;
}

InequalityReport check_strong(const HStarVector& h) {
  InequalityReport rep{"strong", true, true, {}, h.degree, h.dim, std::nullopt};
  long long s = h.degree;
  for (long long i = 1; i < s; ++i) {
    for (long long j = 0; i + j < s; ++j) {
      Int lhs = partial_sum(h.coeffs, 1, i);
      Int rhs = partial_sum(h.coeffs, j + 1, j + i);
      if (lhs > rhs) rep.violations.push_back({{{"i", i}, {"j", j}}, lhs, rhs});
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

std::vector<InequalityReport> check_lower_bounds(const LatticePolytope& p) {
  HStarVector h = hstar_vector(p);
  long long coarse_degree = hstar_vector(coarsen(p)).degree;
  bool interior = has_interior_lattice_point(p);
  bool spanning = spanning_index(p).index == 1;
  const Int& h1 = h.coeffs[1];

  std::vector<InequalityReport> reports;

  InequalityReport spc{"spc_i1", true, true, {}, h.degree, h.dim, spanning};
  for (long long j = 1; j < coarse_degree; ++j)
    if (h1 > h.coeffs[static_cast<std::size_t>(j)])
      spc.violations.push_back({{{"j", j}}, h1, h.coeffs[static_cast<std::size_t>(j)]});
  spc.pass = spc.violations.empty();
  reports.push_back(std::move(spc));

  InequalityReport hibi{"hibi", true, interior, {}, h.degree, h.dim, spanning};
  if (interior) {
    for (long long j = 1; j < h.dim; ++j)
      if (h1 > h.coeffs[static_cast<std::size_t>(j)])
        hibi.violations.push_back({{{"j", j}}, h1, h.coeffs[static_cast<std::size_t>(j)]});
  }
  hibi.pass = hibi.violations.empty();
  reports.push_back(std::move(hibi));

  InequalityReport zeros{"no_internal_zeros", true, spanning, {}, h.degree, h.dim, spanning};
  if (spanning) {
    for (long long j = 0; j <= h.degree; ++j)
      if (h.coeffs[static_cast<std::size_t>(j)] < 1)
        zeros.violations.push_back({{{"j", j}}, 1, h.coeffs[static_cast<std::size_t>(j)]});
  }
  zeros.pass = zeros.violations.empty();
  reports.push_back(std::move(zeros));

  return reports;
}

}  // namespace ehrspan
