#ifndef MAXCLASS_RATMATRIX_HPP
#define MAXCLASS_RATMATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "maxclass/parampoly.hpp"

namespace maxclass {

// Dense matrix over ParamPoly (Rational embeds as a constant polynomial).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  static RatMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  ParamPoly& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const ParamPoly& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const;
  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<ParamPoly> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination.  Non-square input
// is an error.
ParamPoly det(const RatMatrix& m);

// Rank of a parameter-free matrix, by exact elimination over the rationals.
size_t rank_constant(const RatMatrix& m);

struct SolveOptions {
  // When set, only parameter-free pivots are used; columns whose candidate
  // pivots are all parametric stay free and the rows touching them become
  // constraints.  Otherwise a parametric pivot may be used and is recorded as
  // a genericity assumption.
  bool constant_pivots_only = false;
  // Names, by column index, given to free columns in the returned solution.
  // Missing entries default to t1, t2, ...
  std::vector<std::string> free_names;
};

struct SolveResult {
  enum class Kind { Unique, FreeVariables, Inconsistent };
  Kind kind = Kind::Unique;
  // Per-column solution; free columns appear as their own fresh variable and
  // pinned columns may reference those variables.
  std::vector<ParamPoly> solution;
  std::vector<size_t> free_cols;
  std::vector<std::string> free_var_names;
  // Polynomials that must vanish for the system to be solvable (primitive,
  // leading coefficient positive).  May mention the free variables.
  std::vector<ParamPoly> constraints;
  // Row index each constraint came from (rows are never permuted).
  std::vector<size_t> constraint_rows;
  // Parametric pivots assumed nonzero.
  std::vector<ParamPoly> genericity;
};

// Fraction-free elimination over the polynomial coefficient ring.  Pivots
// prefer parameter-free nonzero entries.  m.rows() must equal rhs.size().
SolveResult solve_linear(const RatMatrix& m, const std::vector<ParamPoly>& rhs,
                         const SolveOptions& opt = {});

}  // namespace maxclass

#endif
