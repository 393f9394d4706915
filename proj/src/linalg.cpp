#include "ehrspan/linalg.hpp"

#include <stdexcept>

namespace ehrspan {

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  IntMat r(n, IntVec(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

IntVec mat_vec(const IntMat& a, const IntVec& x) {
  IntVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

IntMat transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat t(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

namespace {

// Bareiss forward elimination in place; returns the row rank.
// On a square matrix with full rank, m[n-1][n-1] ends up holding
// sign * det, where sign tracks the row swaps performed.
long long bareiss(IntMat& m, int& sign) {
  sign = 1;
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<long long>(r);
}

}  // namespace

long long rank_of(IntMat m) {
  int sign;
  return bareiss(m, sign);
}

long long rank_of(const RatMat& m) {
  IntMat scaled(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int lcm_den = 1;
    for (const Rat& x : m[i]) {
      Int d = denominator(x);
      lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
    scaled[i].resize(m[i].size());
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const Rat& x = m[i][j];
      scaled[i][j] = numerator(x) * (lcm_den / denominator(x));
    }
  }
  return rank_of(std::move(scaled));
}

Int determinant(IntMat m) {
  std::size_t n = m.size();
  if (n == 0) return 1;  // det of the empty matrix
  int sign;
  long long r = bareiss(m, sign);
  if (static_cast<std::size_t>(r) < n) return 0;
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

RatVec solve_linear(const IntMat& a, const IntVec& b) {
  std::size_t n = a.size();
  Int det_a = determinant(a);
  if (det_a == 0) throw std::invalid_argument("singular system");
  RatVec x(n);
  // divide rather than construct from (num, den): the two-argument
  // rational constructor requires a positive denominator, det_a may not be
  Rat den{det_a};
  for (std::size_t i = 0; i < n; ++i) {
    IntMat ai = a;
    for (std::size_t r = 0; r < n; ++r) ai[r][i] = b[r];
    x[i] = Rat(determinant(std::move(ai))) / den;
  }
  return x;
}

RatVec solve_any(const RatMat& a, const RatVec& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  RatMat aug(rows, RatVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && aug[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(aug[piv], aug[r]);
    Rat inv = aug[r][c];
    for (std::size_t j = c; j <= cols; ++j) aug[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (aug[i][cols] != 0) throw std::invalid_argument("inconsistent system");
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][cols];
  return x;
}

}  // namespace ehrspan
