#include "ehrspan/ehrhart.hpp"

#include "ehrspan/linalg.hpp"

#include <stdexcept>

namespace ehrspan {

Rat EhrhartPolynomial::evaluate(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

Int EhrhartPolynomial::evaluate_integer(const Int& k) const {
  Rat v = evaluate(Rat(k));
  if (denominator(v) != 1)
    throw std::runtime_error("interpolation mismatch");
  return numerator(v);
}

IntVec ehrhart_counts(const LatticePolytope& p) {
  return ehrhart_counts(p, p.dim());
}

IntVec ehrhart_counts(const LatticePolytope& p, long long k_max) {
  IntVec counts;
  counts.reserve(static_cast<std::size_t>(k_max) + 1);
  for (long long k = 0; k <= k_max; ++k)
    counts.push_back(count_lattice_points(p, Int(k)));
  return counts;
}

EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  long long d = p.dim();
  IntVec counts = ehrhart_counts(p, d + 2);

  // Vandermonde system: row k is (1, k, k^2, ..., k^d), rhs ehr(k).
  std::size_t n = static_cast<std::size_t>(d) + 1;
  IntMat vand(n, IntVec(n));
  IntVec rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    Int power = 1;
    for (std::size_t i = 0; i < n; ++i) {
      vand[k][i] = power;
      power *= Int(k);
    }
    rhs[k] = counts[k];
  }

  EhrhartPolynomial poly{solve_linear(vand, rhs)};

  // Always-on consistency check: the interpolant must reproduce the two
  // counts beyond the interpolation nodes, else counting itself is broken.
  for (long long k = d + 1; k <= d + 2; ++k)
    if (poly.evaluate_integer(Int(k)) != counts[static_cast<std::size_t>(k)])
      throw std::runtime_error("interpolation mismatch");
  return poly;
}

HStarVector hstar_from_counts(const IntVec& counts) {
  long long d = static_cast<long long>(counts.size()) - 1;
  IntVec h(counts.size());
  for (long long i = 0; i <= d; ++i) {
    Int acc = 0;
    for (long long j = 0; j <= i; ++j) {
      Int term = binomial(d + 1, j) * counts[static_cast<std::size_t>(i - j)];
      acc += (j % 2 == 0) ? term : -term;
    }
    if (acc < 0) throw std::runtime_error("h* transform failed");
    h[static_cast<std::size_t>(i)] = acc;
  }
  long long degree = 0;
  Int volume = 0;
  for (long long i = 0; i <= d; ++i) {
    if (h[static_cast<std::size_t>(i)] != 0) degree = i;
    volume += h[static_cast<std::size_t>(i)];
  }
  return HStarVector{std::move(h), degree, d, std::move(volume)};
}

HStarVector hstar_vector(const LatticePolytope& p) {
  return hstar_from_counts(ehrhart_counts(p));
}

}  // namespace ehrspan
