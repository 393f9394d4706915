#pragma once

#include "ehrspan/numeric.hpp"
#include "ehrspan/polytope.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ehrspan {

/// SplitMix64 (Steele–Lea–Flood): state advances by the 64-bit golden
/// ratio, output is the mixed state. Chosen over std::mt19937 +
/// distributions because the stream is fully specified by the algorithm
/// — the same seed yields the same corpus on every platform and in every
/// language that cares to reimplement it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-enough draw in [0, n): plain modulo, accepted bias is
  /// negligible for the tiny ranges used here and keeps the stream
  /// discipline trivial to document.
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Deterministic corpus description: one SplitMix64 stream seeded with
/// `seed`; per instance the draw order is dimension, then point
/// coordinates in row-major order. Identical spec ⇒ identical corpus.
struct CorpusSpec {
  std::uint64_t seed = 0;
  long long count = 0;
  std::pair<long long, long long> dim_range{2, 3};
  long long coordinate_bound = 6;   // coordinates drawn from [0, bound]
  std::string family = "random_simplex";  // or "random_polytope"
};

// Named families. Parameters are validated (throws std::invalid_argument
// on nonsense); vertex sets are exact.
LatticePolytope segment(long long n);                 // conv{0, n} in Z^1
LatticePolytope cube(long long d);                    // [0,1]^d
LatticePolytope unimodular_simplex(long long d);      // conv{0, e_1..e_d}
LatticePolytope reeve_simplex(long long r);           // conv{0,e1,e2,e1+e2+r·e3}
LatticePolytope reeve_bipyramid(long long r);         // reeve_simplex(r) ∪ {−e3}

/// Dispatch by name for the CLI: segment, cube, unimodular_simplex,
/// reeve_simplex, reeve_bipyramid (each takes one integer parameter).
/// Rescaling is separate — see dilate() — since it composes with every
/// family rather than being one.
LatticePolytope standard_family(const std::string& name,
                                const std::vector<long long>& params);

/// c-fold dilation cP (vertex-wise scaling), c ≥ 1.
LatticePolytope dilate(const LatticePolytope& p, const Int& c);

/// Free join: embed P at height 0 and Q at height 1 in complementary
/// coordinate blocks of R^{p+q+1} and take the hull. dim = p + q + 1.
LatticePolytope join(const LatticePolytope& p, const LatticePolytope& q);

/// Join with a single point: conv(P × {0} ∪ {(0,...,0,1)}) in R^{p+1}.
LatticePolytope pyramid(const LatticePolytope& p);

/// Seeded random instances. random_simplex draws d+1 points in
/// [0, bound]^d, random_polytope d+3 points; both redraw until the point
/// set affinely spans, giving up after 1000 attempts per instance with
/// std::runtime_error("degenerate draw").
std::vector<LatticePolytope> random_corpus(const CorpusSpec& spec);

}  // namespace ehrspan
