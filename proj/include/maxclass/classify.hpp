#ifndef MAXCLASS_CLASSIFY_HPP
#define MAXCLASS_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "maxclass/extend.hpp"
#include "maxclass/liealg.hpp"

namespace maxclass {

enum class CanonicalType { m0q, mq, wittq, unknown };
std::string type_name(CanonicalType t);

// First canonical family graded-isomorphic to a (tried in the order
// m0q, mq, wittq); unknown when none matches or a is parametric.
CanonicalType recognize_type(const GradedAlgebra& a);

// One processed constraint along a branch exploration.
struct ConstraintEvent {
  int level = 0;           // degree being attached when the constraint appeared
  std::string source;      // jacobi(i,j,k) provenance
  ParamPoly raw;           // primitive constraint as reported by the solver
  ParamPoly reduced;       // after the bindings active on this branch
  std::string action;      // bound / rational-bound / branch / dead / pending
  std::string detail;      // e.g. "b2 = 50/33" or the rational binding text
};

struct BranchNode {
  std::string binding;     // how this branch was entered, e.g. "b1 = 1/7"
  int start_top = 0;       // highest degree when the branch was entered
  int top_reached = 0;
  enum class Terminal { Interior, DeadEnd, Recognized, OpenFamily } terminal =
      Terminal::Interior;
  CanonicalType recognized = CanonicalType::unknown;
  std::vector<ParamPoly> witness;  // dead-end certificate polynomials
  std::string note;
  std::vector<ConstraintEvent> events;
  // Set on nodes that branched on a univariate constraint of degree >= 2.
  ParamPoly branch_poly;
  std::vector<Rational> branch_roots;
  ParamPoly residual_factor;  // nonrational part after deflating the roots
  std::optional<GradedAlgebra> last_algebra;  // the last accepted algebra
  std::vector<BranchNode> children;
};

struct ClassifySummary {
  int q = 0;
  int max_dim = 0;
  std::vector<CanonicalType> survivors;
  int dead_branches = 0;
  int open_branches = 0;
  // the q=3 family-branch data (k = 3 chain)
  ParamPoly branch_poly;
  std::vector<Rational> branch_roots;
  ParamPoly irrational_factor;
  std::vector<Rational> witt_branch_betas;  // slot values on the 1/7 branch
  std::vector<Rational> k4_bindings, k5_bindings, k6_bindings;
  std::vector<ParamPoly> k6_system;  // the inconsistent linear conditions
};

struct ClassifyResult {
  BranchNode root;
  ClassifySummary summary;
};

// Reproduces the q = 3 classification up to degree max_dim: the unique spine,
// the k = 3 family branch with its degree-10 constraint and root analysis,
// the k = 4, 5, 6 dead ends, and the obstruction dead ends for k > 6.
ClassifyResult classify_q3(int max_dim, int threads = 1);

struct DeviationReport {
  int l = 0;          // deviation at m^q_{0,1}(2l+1)
  bool died = false;
  int death_top = 0;  // degree whose attachment failed
  bool truncated = false;
  std::vector<ParamPoly> witness;
};

struct MainTheoremResult {
  int q = 0, max_dim = 0;
  bool spine_matches_m0q = false;
  std::vector<int> hypothesis_forced_levels;  // odd degrees forced to zero
  std::vector<DeviationReport> deviations;
  bool unique_survivor = false;
  BranchNode root;
};

// Enumerates extension chains from m^q_0(2q) under the vanishing hypothesis
// [g_q, g_{q+1}] = ... = [g_2q, g_{2q+1}] = 0 and checks that every deviation
// dies as the obstruction lemma predicts while the spine survives.
MainTheoremResult verify_main_theorem(int q, int max_dim, int threads = 1);

struct KLemmaReport {
  int k = 0;
  std::vector<Rational> bindings;  // family-slot values along the chain
  bool died = false;
  int death_top = 0;
  std::vector<ParamPoly> witness;
  std::vector<ParamPoly> condition_log;  // raw constraints that bound or killed
  BranchNode node;
};

// The k = 4, 5, 6 chains from m^3_{0,1}(2k+1).
std::vector<KLemmaReport> verify_k_lemmas();

// Explores one central-extension chain with the binding driver: constraints
// bind parameters (rationally or as cleared rational functions), univariate
// constraints of higher degree branch on their roots, nonrational factors are
// chased on their algebraic locus by gcd certificates.
BranchNode explore_family_chain(const GradedAlgebra& start, int max_dim,
                                const std::string& binding_label = "start");

}  // namespace maxclass

#endif
