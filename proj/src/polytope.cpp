#include "ehrspan/polytope.hpp"

#include "ehrspan/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ehrspan {

namespace {

std::string point_to_string(const IntVec& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << ")";
  return os.str();
}

// Normal of the hyperplane spanned by d affinely independent points of R^d:
// n_j = (-1)^j det(D minus column j) for the (d-1) x d difference matrix D.
// Returns the zero vector when the points are affinely dependent.
// The empty 0x0 determinant is 1, which covers d = 1.
IntVec hyperplane_normal(const std::vector<IntVec>& pts) {
  std::size_t d = pts[0].size();
  IntMat diff(pts.size() - 1, IntVec(d));
  for (std::size_t i = 1; i < pts.size(); ++i) diff[i - 1] = vec_sub(pts[i], pts[0]);
  IntVec n(d);
  for (std::size_t j = 0; j < d; ++j) {
    IntMat minor(diff.size(), IntVec(d - 1));
    for (std::size_t r = 0; r < diff.size(); ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c)
        if (c != j) minor[r][cc++] = diff[r][c];
    }
    Int m = determinant(std::move(minor));
    n[j] = (j % 2 == 0) ? m : -m;
  }
  return n;
}

// Brute force over all d-subsets of the points: keep the spanned hyperplanes
// with every point on one side. Correct because every facet of the hull
// contains d affinely independent input points.
std::vector<Facet> enumerate_facets(const std::vector<IntVec>& points, long long dim) {
  std::size_t n = points.size();
  std::size_t d = static_cast<std::size_t>(dim);
  std::set<Facet> found;
  std::vector<std::size_t> idx(d);
  std::vector<IntVec> subset(d);

  auto consider = [&]() {
    for (std::size_t i = 0; i < d; ++i) subset[i] = points[idx[i]];
    IntVec normal = hyperplane_normal(subset);
    bool zero = std::all_of(normal.begin(), normal.end(), [](const Int& x) { return x == 0; });
    if (zero) return;
    Int offset = dot(normal, subset[0]);
    bool any_above = false, any_below = false;
    for (const IntVec& p : points) {
      Int v = dot(normal, p);
      if (v > offset) any_above = true;
      if (v < offset) any_below = true;
      if (any_above && any_below) return;
    }
    if (any_above) {
      for (Int& x : normal) x = -x;
      offset = -offset;
    }
    Int g = gcd_all(normal);
    for (Int& x : normal) x /= g;
    offset /= g;  // exact: the hyperplane passes through a lattice point
    found.insert(Facet{std::move(normal), std::move(offset)});
  };

  // iterative combination enumeration
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  if (d > n) return {};
  while (true) {
    consider();
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

// Recursive box scan. Coordinates before `level` are fixed with partial
// facet sums in `partial`; the innermost coordinate is resolved to an
// exact interval instead of being enumerated per point.
struct DilateScanner {
  const std::vector<Facet>& facets;
  IntVec scaled_offsets;  // slack offsets (k*b, possibly tightened)
  IntVec box_lo, box_hi;
  std::vector<IntVec>* out;  // nullptr when only counting
  Int count = 0;

  void scan(std::size_t level, IntVec& point, IntVec& partial) {
    std::size_t d = box_lo.size();
    if (level + 1 == d) {
      Int lo = box_lo[level], hi = box_hi[level];
      for (std::size_t f = 0; f < facets.size() && lo <= hi; ++f) {
        const Int& a = facets[f].normal[level];
        Int r = scaled_offsets[f] - partial[f];
        if (a == 0) {
          if (r < 0) return;
        } else if (a > 0) {
          hi = std::min(hi, floor_div(r, a));
        } else {
          lo = std::max(lo, ceil_div(r, a));
        }
      }
      if (lo > hi) return;
      if (out) {
        for (Int x = lo; x <= hi; ++x) {
          point[level] = x;
          out->push_back(point);
        }
      } else {
        count += hi - lo + 1;
      }
      return;
    }
    for (Int x = box_lo[level]; x <= box_hi[level]; ++x) {
      point[level] = x;
      IntVec next = partial;
      for (std::size_t f = 0; f < facets.size(); ++f)
        next[f] += facets[f].normal[level] * x;
      scan(level + 1, point, next);
    }
  }
};

// offset_shift = 0 enumerates kP ∩ Z^d; offset_shift = -1 with k = 1
// enumerates the strict interior.
void scan_dilate(const LatticePolytope& p, const Int& k, const Int& offset_shift,
                 std::vector<IntVec>* out, Int* count) {
  const auto& facets = p.facets().facets;
  std::size_t d = static_cast<std::size_t>(p.dim());
  DilateScanner sc{facets, IntVec(facets.size()), IntVec(d), IntVec(d), out};
  for (std::size_t f = 0; f < facets.size(); ++f)
    sc.scaled_offsets[f] = k * facets[f].offset + offset_shift;
  for (std::size_t i = 0; i < d; ++i) {
    Int lo = k * p.vertices()[0][i], hi = lo;
    for (const IntVec& v : p.vertices()) {
      lo = std::min(lo, k * v[i]);
      hi = std::max(hi, k * v[i]);
    }
    sc.box_lo[i] = lo;
    sc.box_hi[i] = hi;
  }
  IntVec point(d), partial(facets.size(), 0);
  sc.scan(0, point, partial);
  if (count) *count = sc.count;
}

}  // namespace

long long affine_dimension(const std::vector<IntVec>& points) {
  if (points.empty()) throw std::invalid_argument("no points");
  IntMat diff;
  diff.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i)
    diff.push_back(vec_sub(points[i], points[0]));
  return rank_of(std::move(diff));
}

LatticePolytope::LatticePolytope(long long ambient_dim, std::vector<IntVec> points)
    : dim_(ambient_dim) {
  if (ambient_dim <= 0) throw std::invalid_argument("ambient dimension must be positive");
  if (points.empty()) throw std::invalid_argument("no points");
  for (const IntVec& p : points)
    if (static_cast<long long>(p.size()) != ambient_dim)
      throw std::invalid_argument("point length does not match ambient dimension");

  std::sort(points.begin(), points.end());
  std::vector<IntVec> unique_pts;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0 && points[i] == points[i - 1]) {
      warnings_.push_back("duplicate point dropped: " + point_to_string(points[i]));
      continue;
    }
    unique_pts.push_back(points[i]);
  }

  if (affine_dimension(unique_pts) != ambient_dim)
    throw std::invalid_argument("degenerate polytope");

  facets_.facets = enumerate_facets(unique_pts, ambient_dim);

  // A point of the hull is a vertex iff its tight facet normals span R^d.
  for (const IntVec& p : unique_pts) {
    IntMat tight;
    for (const Facet& f : facets_.facets)
      if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    if (static_cast<long long>(tight.size()) >= ambient_dim &&
        rank_of(std::move(tight)) == ambient_dim) {
      vertices_.push_back(p);
    } else {
      warnings_.push_back("non-vertex point dropped: " + point_to_string(p));
    }
  }
}

const HalfspaceRep& facet_representation(const LatticePolytope& p) { return p.facets(); }

std::vector<IntVec> lattice_points_in_dilate(const LatticePolytope& p, const Int& k) {
  if (k < 0) throw std::invalid_argument("negative dilation factor");
  if (k == 0) return {IntVec(static_cast<std::size_t>(p.dim()), 0)};
  std::vector<IntVec> out;
  scan_dilate(p, k, 0, &out, nullptr);
  return out;
}

Int count_lattice_points(const LatticePolytope& p, const Int& k) {
  if (k < 0) throw std::invalid_argument("negative dilation factor");
  if (k == 0) return 1;
  Int count = 0;
  scan_dilate(p, k, 0, nullptr, &count);
  return count;
}

std::vector<IntVec> interior_lattice_points(const LatticePolytope& p) {
  std::vector<IntVec> out;
  scan_dilate(p, 1, -1, &out, nullptr);
  return out;
}

bool has_interior_lattice_point(const LatticePolytope& p) {
  Int count = 0;
  scan_dilate(p, 1, -1, nullptr, &count);
  return count > 0;
}

LatticePolytope apply_affine_map(const LatticePolytope& p, const IntMat& u, const IntVec& t) {
  std::vector<IntVec> mapped;
  mapped.reserve(p.vertices().size());
  for (const IntVec& v : p.vertices()) mapped.push_back(vec_add(mat_vec(u, v), t));
  return LatticePolytope(static_cast<long long>(t.size()), std::move(mapped));
}

}  // namespace ehrspan
