#ifndef MAXCLASS_LIEALG_HPP
#define MAXCLASS_LIEALG_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "maxclass/parampoly.hpp"

namespace maxclass {

// N-graded filiform Lie algebra in a canonical basis e_1, e_q, ..., e_top
// with one-dimensional components: [e_1, e_i] = e_{i+1} always, and
// [e_i, e_j] = lambda_{i,j} e_{i+j} for i, j >= q.  Only pairs with i < j and
// nonzero lambda are stored; lambda_{j,i} = -lambda_{i,j} and the derivation
// row is implied.  Immutable after construction.
class GradedAlgebra {
 public:
  using Table = std::map<std::pair<int, int>, ParamPoly>;

  static GradedAlgebra make(int q, int top, Table constants);

  int q() const { return q_; }
  int top() const { return top_; }
  const std::vector<int>& support() const { return support_; }
  const std::vector<std::string>& params() const { return params_; }
  const Table& constants() const { return constants_; }
  int dim() const { return static_cast<int>(support_.size()); }

  bool in_support(int d) const;
  // Signed structure constant: antisymmetry and the derivation row are
  // resolved here; any out-of-range or out-of-support pair is zero.
  ParamPoly bracket(int i, int j) const;

  GradedAlgebra substituted(const std::map<std::string, ParamPoly>& bindings) const;
  bool same_table(const GradedAlgebra& o) const;

 private:
  int q_ = 0, top_ = 0;
  std::vector<int> support_;
  std::vector<std::string> params_;
  Table constants_;
};

// Canonical builders.

// m^q_0(n): only the derivation row is nonzero.
GradedAlgebra build_m0q(int q, int n);
// m_q(n): derivation row plus [e_q, e_i] = e_{q+i}.
GradedAlgebra build_mq(int q, int n);
// Truncated Witt algebra W^q(n) in the basis y_1 = e_1, y_i = c_q (i-2)! e_i,
// which normalizes [y_q, y_{q+1}] to y_{2q+1}.  For q = 3 the constant c_q
// is 60 and lambda_{i,j} = 60 (i-2)! (j-2)! (j-i) / (i+j-2)!.
GradedAlgebra build_witt(int q, int n);
// m^q_{0,s}(2k+s; betas): the s-step central-extension family over m^q_0(2k),
// first family parameter normalized to 1.  betas has floor((s+1)/2)-1 entries
// when s >= 3 and none otherwise.
GradedAlgebra build_extension_family(int q, int k, int s,
                                     const std::vector<ParamPoly>& betas);

enum class AppendixBName { m03, m04_10, m05_11 };
// The q = 2 style tables on support {1, 2, ..., top}.  k is used by m03 only.
GradedAlgebra build_appendix_b(AppendixBName name, int k = 3);

struct JacobiViolation {
  int i, j, k;
  ParamPoly residual;
};
// All triples i < j < k in support with i+j+k in support and <= top whose
// Jacobi cyclic sum is nonzero.  Empty iff the table is a Lie algebra,
// identically in the parameters.
std::vector<JacobiViolation> jacobi_check(const GradedAlgebra& a);

struct LeibnizViolation {
  int i, j;
  ParamPoly residual;
};
// lambda_{i,j} = lambda_{i+1,j} + lambda_{i,j+1} for i, j >= q with
// i + j + 1 <= top; this is the i = 1 Jacobi subfamily.
std::vector<LeibnizViolation> verify_leibniz(const GradedAlgebra& a);

// Diagonal graded isomorphism e_i -> alpha_i e'_i.  alpha_1 and alpha_q
// generate all scalings: alpha_i = alpha_1^{i-q} alpha_q for i >= q.
struct IsoWitness {
  Rational alpha1;
  Rational alphaq;
};
struct NotIsomorphic {
  std::string reason;
};
using IsoResult = std::variant<IsoWitness, NotIsomorphic>;
// Decides graded isomorphism of two parameter-free algebras with equal q,
// top and support (mismatch is an error).
IsoResult graded_iso(const GradedAlgebra& a, const GradedAlgebra& b);

// Line-oriented text format; canonical emit/parse round-trips byte-identically.
std::string emit_algebra(const GradedAlgebra& a);

struct AlgebraParseError : std::runtime_error {
  int line;
  AlgebraParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};
GradedAlgebra parse_algebra(const std::string& text);

}  // namespace maxclass

#endif
