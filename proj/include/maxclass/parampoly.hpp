#ifndef MAXCLASS_PARAMPOLY_HPP
#define MAXCLASS_PARAMPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxclass/rational.hpp"

namespace maxclass {

// Name order used wherever a variable list must be canonical: shorter names
// first, ties broken lexicographically.  For suffix-numbered names (b1, b2,
// ..., b10) this coincides with numeric order.
bool name_before(const std::string& a, const std::string& b);

// Sparse multivariate polynomial over Rational in named parameters.  Terms
// are kept in graded-lexicographic order, leading term first, and no stored
// term has a zero coefficient.  Every operation returns a fresh value; there
// is no shared mutable state.
class ParamPoly {
 public:
  using Mono = std::vector<unsigned>;  // exponents, aligned with vars()

  // Leading-first order: higher total degree wins, ties resolved by the
  // lexicographically larger exponent vector.
  struct MonoBefore {
    bool operator()(const Mono& a, const Mono& b) const;
  };
  using TermMap = std::map<Mono, Rational, MonoBefore>;

  ParamPoly() = default;  // zero
  static ParamPoly constant(const Rational& c);
  static ParamPoly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // throws if not constant

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool uses(const std::string& var) const;
  std::vector<std::string> used_vars() const;
  long total_degree() const;                     // -1 for zero
  long degree_in(const std::string& var) const;  // -1 for zero

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly scaled(const Rational& c) const;
  ParamPoly pow(unsigned e) const;

  bool operator==(const ParamPoly& o) const;
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }
  // Total order compatible with ==; keeps constraint sets deterministic.
  static int compare(const ParamPoly& a, const ParamPoly& b);

  // Coefficient polynomial of var^e, with var itself removed.
  ParamPoly coeff_of(const std::string& var, unsigned e) const;

  // Exact composition; unbound variables pass through.
  ParamPoly substitute(const std::map<std::string, ParamPoly>& bindings) const;
  // Exact evaluation; every used variable must be bound.
  Rational eval(const std::map<std::string, Rational>& point) const;
  ParamPoly derivative(const std::string& var) const;

  // Positive gcd of the coefficients (0 for the zero polynomial).
  Rational content() const;
  // p divided by its content, sign fixed so the leading coefficient is > 0.
  ParamPoly primitive_part() const;
  // Exact division; nullopt when the divisor does not divide.
  std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;
  // The scalar c with a == b.scaled(c), when it exists and is nonzero.
  static std::optional<Rational> proportional(const ParamPoly& a,
                                              const ParamPoly& b);

  // Canonical text form, e.g. "245*b1^10 + 238*b1^9 - 606*b1^8 - 1/3".
  std::string str() const;
  static ParamPoly parse(const std::string& text);

  // Same polynomial with unused variables dropped from the list.
  ParamPoly pruned() const;
  // Same polynomial re-expressed over a superset variable list.
  ParamPoly with_vars(const std::vector<std::string>& vars) const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void add_term(const Mono& m, const Rational& c);
  static ParamPoly aligned_combine(const ParamPoly& a, const ParamPoly& b,
                                   bool subtract);
};

}  // namespace maxclass

#endif
