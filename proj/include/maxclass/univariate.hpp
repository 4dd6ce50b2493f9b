#ifndef MAXCLASS_UNIVARIATE_HPP
#define MAXCLASS_UNIVARIATE_HPP

#include <string>
#include <vector>

#include "maxclass/parampoly.hpp"

namespace maxclass {

// Dense coefficient view of a univariate polynomial: coeffs[i] is the
// coefficient of x^i.  Throws if p uses more than one variable.
std::vector<Rational> univariate_coeffs(const ParamPoly& p, std::string* var_out = nullptr);

// Rebuild a ParamPoly from dense coefficients in the given variable.
ParamPoly from_univariate_coeffs(const std::vector<Rational>& coeffs,
                                 const std::string& var);

// Monic greatest common divisor over the rationals.  Both inputs must be
// univariate in the same parameter (constants allowed); both zero is an error.
ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

// Every rational root of p, multiplicity stripped, sorted ascending.  Found by
// clearing denominators, removing content and the x^k factor, then testing the
// p|trailing, q|leading candidates.  Zero polynomial is an error.
std::vector<Rational> rational_roots(const ParamPoly& p);

// Quotient of exact division by (var - root); the root must actually be one.
ParamPoly deflate_root(const ParamPoly& p, const std::string& var, const Rational& root);

}  // namespace maxclass

#endif
