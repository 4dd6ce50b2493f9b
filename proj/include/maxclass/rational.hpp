#ifndef MAXCLASS_RATIONAL_HPP
#define MAXCLASS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace maxclass {

// Exact scalars. cpp_rational keeps gcd(|num|, den) = 1 and den > 0,
// which is the representation every module below relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// "num/den", den omitted when 1.  Matches the canonical text serialization.
inline std::string rat_str(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

// C(n, k) with the boundary convention C(n, k) = 0 when k < 0, k > n or n < 0.
// This is the only reading that keeps the triple-sum bounds of the variety
// generators well defined at boundary indices.
inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int b = 1;
  for (long i = 1; i <= k; ++i) {
    b *= (n - k + i);
    b /= i;
  }
  return b;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0^negative");
    return Rational(1) / rat_pow(base, -e);
  }
  Rational r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace maxclass

#endif
