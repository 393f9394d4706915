#include "ehrspan/numeric.hpp"

#include <stdexcept>

namespace ehrspan {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("division by zero");
  Int q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("division by zero");
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) == (b < 0))) ++q;
  return q;
}

Int gcd_all(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return abs(g);
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int num = 1;
  for (long long i = 0; i < k; ++i) {
    num *= Int(n - i);
    num /= Int(i + 1);  // exact: product of j consecutive integers divisible by j!
  }
  return num;
}

Int factorial(long long n) {
  Int f = 1;
  for (long long i = 2; i <= n; ++i) f *= Int(i);
  return f;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    // divide rather than construct from (num, den): the two-argument
    // constructor rejects negative denominators, division normalizes them
    return Rat(num) / Rat(den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    // the big-integer parser reports garbage as a runtime error; fold it
    // into the invalid_argument contract every caller relies on
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

std::string rational_to_string(const Rat& r) {
  Int den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

}  // namespace ehrspan
