#ifndef MAXCLASS_EXTEND_HPP
#define MAXCLASS_EXTEND_HPP

#include <optional>
#include <string>
#include <vector>

#include "maxclass/liealg.hpp"
#include "maxclass/ratmatrix.hpp"

namespace maxclass {

// Result of one graded one-dimensional central-extension step.
struct ExtensionOutcome {
  enum class Kind { Unique, OneParamFamily, Inconsistent };
  Kind kind = Kind::Unique;
  // Present for Unique and OneParamFamily.
  std::optional<GradedAlgebra> algebra;
  // The slot whose constant became the fresh parameter (family case).
  std::optional<std::pair<int, int>> free_slot;
  std::string fresh_param;
  // Polynomials that must vanish for the step (and the input family) to be a
  // Lie algebra; primitive, deterministic order, deduplicated.  A nonzero
  // constant here certifies Inconsistent.
  std::vector<ParamPoly> constraints;
  std::vector<std::string> constraint_sources;  // parallel to constraints
  std::vector<ParamPoly> genericity;
};

// Solves the degree-(top+1) extension problem: unknowns u_r = lambda_{r,N-r},
// the i = 1 Jacobi relations, the midpoint antisymmetry anchor, and every
// Jacobi triple (i,j,k) with q <= i < j < k and i+j+k = N.  Input residuals
// that are nonzero constants reject the input; parametric residuals are
// carried as constraints.
ExtensionOutcome extend_once(const GradedAlgebra& a);

struct ChainResult {
  enum class Death { None, ConstantWitness, LinearCertificate };
  std::vector<ExtensionOutcome> steps;
  std::vector<ParamPoly> accumulated;  // all distinct constraints so far
  Death death = Death::None;
  size_t death_step = 0;               // index into steps when death occurred
  std::vector<ParamPoly> witness;      // the certificate constraints
};

// Applies extend_once repeatedly, threading family parameters symbolically.
// Stops early when a step is Inconsistent or when the affine-linear subset of
// the accumulated constraints has no solution over any field (rank
// certificate).
ChainResult extend_chain(const GradedAlgebra& a, int steps);

// The q x q binomial matrix of the central-extension obstruction: row r
// (0-based) is C(k-r, k-r-1), C(k-r+1, k-r-2), ..., C(k-r+q-1, k-r-q).
// Requires k > 2q.
RatMatrix binomial_matrix(int q, int k);

}  // namespace maxclass

#endif
