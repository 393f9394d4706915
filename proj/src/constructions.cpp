#include "ehrspan/constructions.hpp"

#include <stdexcept>

namespace ehrspan {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

LatticePolytope segment(long long n) {
  require(n >= 1, "segment length must be positive");
  return LatticePolytope(1, {{Int(0)}, {Int(n)}});
}

LatticePolytope cube(long long d) {
  require(d >= 1, "cube dimension must be positive");
  std::vector<IntVec> verts;
  verts.reserve(1u << d);
  for (long long mask = 0; mask < (1LL << d); ++mask) {
    IntVec v(static_cast<std::size_t>(d));
    for (long long i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    verts.push_back(std::move(v));
  }
  return LatticePolytope(d, std::move(verts));
}

LatticePolytope unimodular_simplex(long long d) {
  require(d >= 1, "simplex dimension must be positive");
  std::vector<IntVec> verts(static_cast<std::size_t>(d) + 1,
                            IntVec(static_cast<std::size_t>(d), 0));
  for (long long i = 0; i < d; ++i)
    verts[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] = 1;
  return LatticePolytope(d, std::move(verts));
}

LatticePolytope reeve_simplex(long long r) {
  require(r >= 1, "reeve parameter must be positive");
  return LatticePolytope(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, Int(r)}});
}

LatticePolytope reeve_bipyramid(long long r) {
  require(r >= 1, "reeve parameter must be positive");
  return LatticePolytope(3, {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, Int(r)}});
}

LatticePolytope standard_family(const std::string& name,
                                const std::vector<long long>& params) {
  require(params.size() == 1, "family '" + name + "' takes exactly one parameter");
  long long p = params[0];
  if (name == "segment") return segment(p);
  if (name == "cube") return cube(p);
  if (name == "unimodular_simplex") return unimodular_simplex(p);
  if (name == "reeve_simplex") return reeve_simplex(p);
  if (name == "reeve_bipyramid") return reeve_bipyramid(p);
  throw std::invalid_argument("unknown family: " + name);
}

LatticePolytope dilate(const LatticePolytope& p, const Int& c) {
  require(c >= 1, "dilation factor must be positive");
  std::vector<IntVec> verts = p.vertices();
  for (IntVec& v : verts)
    for (Int& x : v) x *= c;
  return LatticePolytope(p.dim(), std::move(verts));
}

LatticePolytope join(const LatticePolytope& p, const LatticePolytope& q) {
  std::size_t dp = static_cast<std::size_t>(p.dim());
  std::size_t dq = static_cast<std::size_t>(q.dim());
  std::size_t dim = dp + dq + 1;
  std::vector<IntVec> verts;
  verts.reserve(p.vertices().size() + q.vertices().size());
  for (const IntVec& v : p.vertices()) {
    IntVec w(dim, 0);
    for (std::size_t i = 0; i < dp; ++i) w[i] = v[i];
    verts.push_back(std::move(w));
  }
  for (const IntVec& v : q.vertices()) {
    IntVec w(dim, 0);
    for (std::size_t i = 0; i < dq; ++i) w[dp + i] = v[i];
    w[dim - 1] = 1;
    verts.push_back(std::move(w));
  }
  return LatticePolytope(static_cast<long long>(dim), std::move(verts));
}

LatticePolytope pyramid(const LatticePolytope& p) {
  std::size_t dp = static_cast<std::size_t>(p.dim());
  std::vector<IntVec> verts;
  verts.reserve(p.vertices().size() + 1);
  for (const IntVec& v : p.vertices()) {
    IntVec w(dp + 1, 0);
    for (std::size_t i = 0; i < dp; ++i) w[i] = v[i];
    verts.push_back(std::move(w));
  }
  verts.push_back(IntVec(dp + 1, 0));
  verts.back()[dp] = 1;
  return LatticePolytope(static_cast<long long>(dp) + 1, std::move(verts));
}

std::vector<LatticePolytope> random_corpus(const CorpusSpec& spec) {
  if (spec.family != "random_simplex" && spec.family != "random_polytope")
    throw std::invalid_argument("unknown family: " + spec.family);
  if (spec.count < 0) throw std::invalid_argument("corpus count must be nonnegative");
  if (spec.dim_range.first < 1 || spec.dim_range.second < spec.dim_range.first)
    throw std::invalid_argument("bad dimension range");
  if (spec.coordinate_bound < 1) throw std::invalid_argument("coordinate bound must be positive");

  SplitMix64 rng(spec.seed);
  std::vector<LatticePolytope> out;
  out.reserve(static_cast<std::size_t>(spec.count));

  for (long long n = 0; n < spec.count; ++n) {
    long long span = spec.dim_range.second - spec.dim_range.first + 1;
    long long d = spec.dim_range.first +
                  static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(span)));
    long long npoints = d + (spec.family == "random_simplex" ? 1 : 3);

    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      std::vector<IntVec> pts(static_cast<std::size_t>(npoints),
                              IntVec(static_cast<std::size_t>(d)));
      for (auto& pt : pts)
        for (auto& x : pt)
          x = Int(rng.bounded(static_cast<std::uint64_t>(spec.coordinate_bound) + 1));
      if (affine_dimension(pts) != d) continue;
      out.emplace_back(d, std::move(pts));
      placed = true;
    }
    if (!placed) throw std::runtime_error("degenerate draw");
  }
  return out;
}

}  // namespace ehrspan
