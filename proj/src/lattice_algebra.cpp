#include "ehrspan/lattice_algebra.hpp"

#include "ehrspan/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ehrspan {

namespace {

Int abs_int(const Int& x) { return x < 0 ? -x : x; }

}  // namespace

HermiteForm hermite_normal_form(const IntMat& m) {
  if (m.empty() || m[0].empty()) throw std::invalid_argument("empty matrix");
  std::size_t rows = m.size(), cols = m[0].size();
  HermiteForm f{m, identity_matrix(static_cast<long long>(rows))};
  IntMat& h = f.h;
  IntMat& u = f.u;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination in column c, rows r..: repeatedly pull the
    // smallest nonzero entry up and reduce the others modulo it.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h[i][c] != 0 && (best == rows || abs_int(h[i][c]) < abs_int(h[best][c])))
          best = i;
      if (best == rows) break;  // column all zero below r
      std::swap(h[r], h[best]);
      std::swap(u[r], u[best]);
      bool reduced_all = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Int q = h[i][c] / h[r][c];  // truncated; leftover handled next pass
        for (std::size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
        for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
        if (h[i][c] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (h[r][c] == 0) continue;  // no pivot in this column
    if (h[r][c] < 0) {
      for (Int& x : h[r]) x = -x;
      for (Int& x : u[r]) x = -x;
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h[i][c], h[r][c]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
      for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
    }
    ++r;
  }
  return f;
}

SmithForm smith_normal_form(const IntMat& m) {
  if (m.empty() || m[0].empty()) throw std::invalid_argument("empty matrix");
  std::size_t rows = m.size(), cols = m[0].size();
  IntMat s = m;
  IntMat u = identity_matrix(static_cast<long long>(rows));
  IntMat v = identity_matrix(static_cast<long long>(cols));

  auto row_sub = [&](std::size_t i, std::size_t k, const Int& q) {
    for (std::size_t j = 0; j < cols; ++j) s[i][j] -= q * s[k][j];
    for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[k][j];
  };
  auto col_sub = [&](std::size_t j, std::size_t k, const Int& q) {
    for (std::size_t i = 0; i < rows; ++i) s[i][j] -= q * s[i][k];
    for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][k];
  };
  auto col_add = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < rows; ++i) s[i][j] += s[i][k];
    for (std::size_t i = 0; i < cols; ++i) v[i][j] += v[i][k];
  };

  std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
  restart:
    // Bring the absolutely smallest nonzero entry of the trailing
    // submatrix to position (t, t).
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s[i][j] != 0 && (pi == rows || abs_int(s[i][j]) < abs_int(s[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;  // trailing submatrix is zero
    if (pi != t) { std::swap(s[pi], s[t]); std::swap(u[pi], u[t]); }
    if (pj != t) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(s[i][pj], s[i][t]);
      for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][pj], v[i][t]);
    }

    // Alternate row and column reduction until the pivot cross is clear.
    bool dirty = false;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (s[i][t] != 0) {
        row_sub(i, t, s[i][t] / s[t][t]);
        if (s[i][t] != 0) dirty = true;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (s[t][j] != 0) {
        col_sub(j, t, s[t][j] / s[t][t]);
        if (s[t][j] != 0) dirty = true;
      }
    if (dirty) goto restart;

    if (s[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) s[t][j] = -s[t][j];
      for (std::size_t j = 0; j < rows; ++j) u[t][j] = -u[t][j];
    }

    // Divisibility fix-up: the pivot must divide every entry of the
    // trailing submatrix; fold an offending column into column t and redo.
    for (std::size_t i = t + 1; i < rows; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (s[i][j] % s[t][t] != 0) {
          col_add(t, j);
          goto restart;
        }
  }

  SmithForm f;
  f.diagonal.resize(limit);
  for (std::size_t t = 0; t < limit; ++t) f.diagonal[t] = s[t][t];
  f.left = std::move(u);
  f.right = std::move(v);
  f.source_shape = {static_cast<long long>(rows), static_cast<long long>(cols)};
  return f;
}

PointLatticeInfo spanning_index(const LatticePolytope& p) {
  std::vector<IntVec> pts = lattice_points_in_dilate(p, 1);
  std::size_t d1 = static_cast<std::size_t>(p.dim()) + 1;
  IntMat gen(pts.size(), IntVec(d1));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    gen[i][0] = 1;
    for (std::size_t j = 1; j < d1; ++j) gen[i][j] = pts[i][j - 1];
  }

  SmithForm snf = smith_normal_form(gen);
  PointLatticeInfo info;
  info.snf_diagonal = snf.diagonal;
  info.index = 1;
  for (const Int& d : snf.diagonal) {
    if (d == 0) throw std::logic_error("point lattice is not full rank");
    info.index *= d;
  }

  // The nonzero HNF rows are a basis of the row lattice L.
  HermiteForm hnf = hermite_normal_form(gen);
  info.basis_of_l.assign(hnf.h.begin(), hnf.h.begin() + static_cast<long>(d1));
  return info;
}

LatticePolytope coarsen(const LatticePolytope& p) {
  std::size_t d = static_cast<std::size_t>(p.dim());
  std::vector<IntVec> pts = lattice_points_in_dilate(p, 1);  // lex ascending
  const IntVec& anchor = pts[0];

  IntMat diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], anchor));

  // Basis of the difference lattice: nonzero HNF rows.
  HermiteForm hnf = hermite_normal_form(diffs);
  IntMat basis(hnf.h.begin(), hnf.h.begin() + static_cast<long>(d));

  // Rewrite each vertex: v - anchor = c · basis with integral c, i.e.
  // solve basis^T c = v - anchor.
  IntMat bt = transpose(basis);
  std::vector<IntVec> mapped;
  mapped.reserve(p.vertices().size());
  for (const IntVec& vert : p.vertices()) {
    RatVec c = solve_linear(bt, vec_sub(vert, anchor));
    IntVec ci(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (denominator(c[j]) != 1)
        throw std::logic_error("vertex escapes its own point lattice");
      ci[j] = numerator(c[j]);
    }
    mapped.push_back(std::move(ci));
  }
  return LatticePolytope(static_cast<long long>(d), std::move(mapped));
}

}  // namespace ehrspan
