#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrspan/constructions.hpp"
#include "ehrspan/ehrhart.hpp"
#include "ehrspan/inequalities.hpp"
#include "ehrspan/lattice_algebra.hpp"
#include "helpers.hpp"

using namespace ehrspan;

namespace {

HStarVector make_hstar(IntVec coeffs, long long dim) {
  HStarVector h;
  h.dim = dim;
  h.degree = 0;
  h.normalized_volume = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) h.degree = static_cast<long long>(i);
    h.normalized_volume += coeffs[i];
  }
  h.coeffs = std::move(coeffs);
  return h;
}

Int window_sum(const IntVec& h, long long from, long long to) {
  Int s = 0;
  for (long long j = from; j <= to; ++j) s += h[static_cast<std::size_t>(j)];
  return s;
}

}  // namespace

TEST_CASE("palindromic partial sums on hand-checked vectors") {
  InequalityReport r = check_stanley(make_hstar({1, 2, 1, 2, 0, 0}, 5));
  CHECK(r.family == "stanley");
  CHECK(r.pass);
  CHECK(r.applicable);
  CHECK(r.violations.empty());

  // degree 0: the single i = 0 comparison is 1 ≤ 1
  CHECK(check_stanley(make_hstar({1}, 0)).pass);
  CHECK(check_stanley(make_hstar({1, 0, 1, 0}, 3)).pass);

  // fabricated failing vector (2, 0, 1): i = 0 gives 2 > 1 and i = 1
  // gives 2+0 > 0+1 — both recorded, not just the first
  InequalityReport bad = check_stanley(make_hstar({2, 0, 1}, 2));
  CHECK(!bad.pass);
  REQUIRE(bad.violations.size() == 2);
  CHECK(bad.violations[0].params.at("i") == 0);
  CHECK(bad.violations[0].lhs == 2);
  CHECK(bad.violations[0].rhs == 1);
  CHECK(bad.violations[1].params.at("i") == 1);
}

TEST_CASE("consecutive-window bounds flag the join vector") {
  InequalityReport r = check_strong(make_hstar({1, 2, 1, 2, 0, 0}, 5));
  CHECK(r.family == "strong");
  CHECK(!r.pass);
  REQUIRE(!r.violations.empty());
  // the characteristic failure: window h_1 vs window h_2 (i = 1, j = 1)
  bool found = false;
  for (const Violation& v : r.violations)
    if (v.params.at("i") == 1 && v.params.at("j") == 1) {
      found = true;
      CHECK(v.lhs == 2);
      CHECK(v.rhs == 1);
    }
  CHECK(found);
}

TEST_CASE("consecutive-window bounds pass where they should") {
  CHECK(check_strong(make_hstar({1, 2, 2}, 2)).pass);
  CHECK(check_strong(make_hstar({1, 4, 4, 2}, 3)).pass);
  // s ≤ 1 leaves no (i, j) with i ≥ 1, j ≥ 0, i + j < s: vacuous pass
  InequalityReport vac = check_strong(make_hstar({1, 7}, 1));
  CHECK(vac.pass);
  CHECK(vac.violations.empty());
}

TEST_CASE("violation sides are recomputable from the vector") {
  IntVec h = {1, 2, 1, 2, 0, 0};
  InequalityReport r = check_strong(make_hstar(h, 5));
  for (const Violation& v : r.violations) {
    long long i = v.params.at("i");
    long long j = v.params.at("j");
    CHECK(v.lhs == window_sum(h, 1, i));
    CHECK(v.rhs == window_sum(h, j + 1, j + i));
    CHECK(v.lhs > v.rhs);
  }
}

TEST_CASE("lower bound families on the reeve simplex") {
  // h* = (1,0,1,0): not spanning (index 2), no interior point,
  // coarse polytope is unimodular so spc range is empty.
  auto reports = check_lower_bounds(reeve_simplex(2));
  REQUIRE(reports.size() == 3);

  CHECK(reports[0].family == "spc_i1");
  CHECK(reports[0].applicable);
  CHECK(reports[0].pass);  // vacuous: coarse degree 0

  CHECK(reports[1].family == "hibi");
  CHECK(!reports[1].applicable);
  CHECK(reports[1].pass);

  CHECK(reports[2].family == "no_internal_zeros");
  CHECK(!reports[2].applicable);  // index 2: hypothesis fails
  CHECK(reports[2].pass);
  REQUIRE(reports[2].spanning.has_value());
  CHECK(!*reports[2].spanning);
}

TEST_CASE("lower bound families on polytopes with interior points") {
  // [0,2]^3: h* = (1, 23, 23, 1), interior point present, spanning
  LatticePolytope c = dilate(cube(3), 2);
  HStarVector h = hstar_vector(c);
  REQUIRE(h.coeffs == IntVec{1, 23, 23, 1});

  auto reports = check_lower_bounds(c);
  for (const InequalityReport& r : reports) {
    CHECK(r.pass);
    if (r.family == "hibi") CHECK(r.applicable);
    if (r.family == "no_internal_zeros") {
      CHECK(r.applicable);
      REQUIRE(r.spanning.has_value());
      CHECK(*r.spanning);
    }
  }
}

TEST_CASE("no_internal_zeros sees every coefficient up to the degree") {
  LatticePolytope p = reeve_bipyramid(3);
  REQUIRE(spanning_index(p).index == 1);
  auto reports = check_lower_bounds(p);
  const InequalityReport* nz = nullptr;
  for (const auto& r : reports)
    if (r.family == "no_internal_zeros") nz = &r;
  REQUIRE(nz != nullptr);
  CHECK(nz->applicable);
  CHECK(nz->pass);
  HStarVector h = hstar_vector(p);
  for (long long j = 0; j <= h.degree; ++j)
    CHECK(h.coeffs[static_cast<std::size_t>(j)] >= 1);
}

TEST_CASE("interior point makes the two pointwise families agree") {
  // when an interior point exists, degree = d, so the hibi range 1..d-1
  // sits inside the spc range whenever the coarse degree is also d.
  CorpusSpec spec;
  spec.seed = 151;
  spec.count = 20;
  spec.dim_range = {2, 3};
  for (const LatticePolytope& p : random_corpus(spec)) {
    auto reports = check_lower_bounds(p);
    const InequalityReport *spc = nullptr, *hibi = nullptr;
    for (const auto& r : reports) {
      if (r.family == "spc_i1") spc = &r;
      if (r.family == "hibi") hibi = &r;
    }
    REQUIRE(spc != nullptr);
    REQUIRE(hibi != nullptr);
    CHECK(spc->pass);  // theorem: holds for every lattice polytope
    if (hibi->applicable) CHECK(hibi->pass);
  }
}

TEST_CASE("stanley passes on every corpus member") {
  CorpusSpec spec;
  spec.seed = 163;
  spec.count = 30;
  spec.dim_range = {2, 4};
  spec.family = "random_polytope";
  for (const LatticePolytope& p : random_corpus(spec))
    CHECK(check_stanley(hstar_vector(p)).pass);
}
