#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ehrspan {

namespace mp = boost::multiprecision;

// Exact arbitrary-precision scalars. Expression templates are disabled so
// both types behave as ordinary values (auto, ternaries, containers).
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Floor of a/b. b must be nonzero.
Int floor_div(const Int& a, const Int& b);

/// Ceiling of a/b. b must be nonzero.
Int ceil_div(const Int& a, const Int& b);

/// gcd of all entries, nonnegative; 0 for an empty or all-zero vector.
Int gcd_all(const IntVec& v);

/// Binomial coefficient C(n, k); 0 outside the Pascal triangle.
Int binomial(long long n, long long k);

Int factorial(long long n);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
Int dot(const IntVec& a, const IntVec& b);

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rat parse_rational(const std::string& s);

/// Canonical "p" or "p/q" form, matching parse_rational.
std::string rational_to_string(const Rat& r);

}  // namespace ehrspan
