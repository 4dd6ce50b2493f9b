#ifndef MAXCLASS_VARIETIES_HPP
#define MAXCLASS_VARIETIES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maxclass/parampoly.hpp"
#include "maxclass/ratmatrix.hpp"

namespace maxclass {

// Projective coordinate of the parameter space: x_{j,s} of weight s, or the
// distinguished weight -1 coordinate x_{-1} (named "xm1").
struct VarietyVar {
  int j = 0;
  int s = 0;
  bool xminus1 = false;

  static VarietyVar x(int j, int s) { return {j, s, false}; }
  static VarietyVar xm1() { return {0, -1, true}; }
  int weight() const { return xminus1 ? -1 : s; }
  std::string name() const;
  static std::optional<VarietyVar> try_parse(const std::string& name);
  bool operator==(const VarietyVar& o) const {
    return j == o.j && s == o.s && xminus1 == o.xminus1;
  }
  bool operator<(const VarietyVar& o) const;
};

struct LabeledPoly {
  std::string label;  // F(j,q,r), F+xG(j,q,r) or xG(j,q,r)
  int j = 0, q = 0, r = 0;
  ParamPoly poly;
};

// Defining system of M_n in its minimal version: vars lists exactly the
// variable names that occur (xm1 first, then x[j,s] by (j, s); coordinates of
// a derived presentation keep their declaration order).
struct PolySystem {
  int n = 0;
  std::vector<std::string> vars;
  std::vector<LabeledPoly> polys;
};

// The quadratic generator F_{j,q,r}: three binomial-weighted summand groups
// over monomials x_{l,t} x_{m,r-t}.  Requires 2 <= j < q, r >= 0.
ParamPoly gen_F(int j, int q, int r);
// The linear generator G_{j,q,r} over monomials x_{l,r+1}.  Requires
// 2 <= j < q, r >= -1.
ParamPoly gen_G(int j, int q, int r);

// The full system for M_n (n >= 9): for odd n all F_{j,q,r} = 0 with
// j+2q+r+1 <= n; for even n the three families, with the middle family
// F + (-1)^{n/2-j-q} x_{-1} G at j+2q+1+r = n and x_{-1} G_{j,q,-1} at
// j+2q = n.
PolySystem assemble_system(int n);

// Substitutes the inverse of the linear definitions new = L(old) into
// every polynomial.  defs must be invertible on the occurring variables.
PolySystem change_coords(const PolySystem& sys,
                         const std::vector<std::pair<std::string, ParamPoly>>& defs);

// Zeroes the named variables, drops identically-zero polynomials, recomputes
// the occurring-variable list.
PolySystem restrict_vars(const PolySystem& sys, const std::set<std::string>& zeroed);
// Zeroes every variety variable of the given weights (-1 addresses x_{-1}).
PolySystem restrict_weights(const PolySystem& sys, const std::set<int>& weights);

// Eliminates a variable using a linear equation var = rhs (exact substitution).
PolySystem eliminate_var(const PolySystem& sys, const std::string& var,
                         const ParamPoly& rhs);

// Matrix of partials: rows = polynomials, columns = vars in declared order.
RatMatrix jacobian(const PolySystem& sys);

// Exact evaluation of each polynomial; every occurring variable must be bound.
std::vector<Rational> eval_point(const PolySystem& sys,
                                 const std::map<std::string, Rational>& point);

// One polynomial per line, "<label>: <canonical serialization>", ordered by
// (j, q, r).
std::string emit_system(const PolySystem& sys);

}  // namespace maxclass

#endif
