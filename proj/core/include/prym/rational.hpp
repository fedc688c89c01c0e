#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace prym {

// Exact arbitrary-precision arithmetic. cpp_rational keeps fractions in
// canonical form (reduced, positive denominator) which the serialization
// format "p/q" relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial_int(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational factorial(long n) { return Rational(factorial_int(n)); }

// C(n,k), zero outside the combinatorial range (k < 0, k > n, or n < 0;
// the n < 0 case makes trailing terms of the indexed class sums vanish).
inline Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  if (k > n - k) k = n - k;
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return Rational(num, den);
}

// Lossless "p/q" form ("p" when the denominator is 1).
inline std::string rational_str(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  }
}

}  // namespace prym
