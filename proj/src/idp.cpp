#include "ehrspan/idp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehrspan {

IdpVerdict is_idp(const LatticePolytope& p) {
  return is_idp(p, std::max<long long>(2, p.dim() - 1));
}

IdpVerdict is_idp(const LatticePolytope& p, long long k_max) {
  if (k_max < 2) throw std::invalid_argument("trivial range");

  std::vector<IntVec> base = lattice_points_in_dilate(p, 1);
  std::vector<IntVec> sums = base;  // S_1

  for (long long k = 2; k <= k_max; ++k) {
    std::vector<IntVec> next;
    next.reserve(sums.size() * base.size());
    for (const IntVec& s : sums)
      for (const IntVec& b : base) next.push_back(vec_add(s, b));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    std::vector<IntVec> target = lattice_points_in_dilate(p, Int(k));
    if (next != target) {
      // S_k ⊆ kP ∩ Z^d always holds, so the first point of the sorted
      // symmetric difference is the lex-smallest undecomposable point.
      IntVec witness;
      std::size_t si = 0;
      for (const IntVec& t : target) {
        if (si < next.size() && next[si] == t) {
          ++si;
          continue;
        }
        witness = t;
        break;
      }
      return IdpVerdict{false, k, std::make_pair(k, std::move(witness))};
    }
    sums = std::move(target);  // S_k == kP ∩ Z^d, already sorted and unique
  }
  return IdpVerdict{true, k_max, std::nullopt};
}

}  // namespace ehrspan
