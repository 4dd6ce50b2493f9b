#include "maxclass/extend.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace maxclass {

namespace {

std::string fresh_param_name(const GradedAlgebra& a) {
  for (int i = 1;; ++i) {
    std::string name = "b" + std::to_string(i);
    if (std::find(a.params().begin(), a.params().end(), name) == a.params().end())
      return name;
  }
}

std::string triple_tag(const char* what, int i, int j, int k) {
  std::ostringstream os;
  os << what << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

void push_constraint(std::vector<ParamPoly>& cs, std::vector<std::string>& srcs,
                     const ParamPoly& p, const std::string& src) {
  ParamPoly n = p.primitive_part();
  if (n.is_zero()) return;
  for (const auto& c : cs)
    if (c == n) return;
  cs.push_back(n);
  srcs.push_back(src);
}

}  // namespace

ExtensionOutcome extend_once(const GradedAlgebra& a) {
  ExtensionOutcome out;

  for (const auto& v : jacobi_check(a)) {
    if (v.residual.is_constant()) {
      std::ostringstream os;
      os << "input is not a Lie algebra: Jacobi fails at (" << v.i << "," << v.j
         << "," << v.k << ") with residual " << v.residual.str();
      throw std::domain_error(os.str());
    }
    push_constraint(out.constraints, out.constraint_sources, v.residual,
                    triple_tag("input", v.i, v.j, v.k));
  }

  const int N = a.top() + 1;
  const int q = a.q();

  // unknown slots u_r = lambda_{r, N-r}, ascending r
  std::vector<std::pair<int, int>> slots;
  for (int r = q; 2 * r < N; ++r)
    if (a.in_support(r) && a.in_support(N - r)) slots.emplace_back(r, N - r);
  std::map<int, size_t> slot_of;  // lower index -> column
  for (size_t c = 0; c < slots.size(); ++c) slot_of[slots[c].first] = c;

  // signed column reference for a level-N pair; nullopt = identically zero
  auto signed_slot = [&](int x, int y) -> std::optional<std::pair<int, size_t>> {
    if (x == y) return std::nullopt;  // midpoint, antisymmetry
    int lo = std::min(x, y), hi = std::max(x, y);
    auto it = slot_of.find(lo);
    if (it == slot_of.end()) {
      if (!a.in_support(lo) || !a.in_support(hi)) return std::nullopt;
      throw std::logic_error("unexpected level-N pair outside the slot set");
    }
    return std::make_pair(x < y ? 1 : -1, it->second);
  };

  struct Eq {
    std::vector<ParamPoly> coeff;
    ParamPoly rhs;
    std::string src;
  };
  std::vector<Eq> eqs;

  // J(e_1, e_r, e_{N-1-r}) = 0:  u_r + lambda_{r+1, N-1-r} = lambda_{r, N-1-r}
  for (int r = q; 2 * r < N - 1; ++r) {
    const int l = N - 1 - r;
    if (!a.in_support(r) || !a.in_support(l)) continue;
    Eq eq;
    eq.coeff.assign(slots.size(), ParamPoly());
    eq.coeff[slot_of.at(r)] = ParamPoly::constant(1);
    if (auto s = signed_slot(r + 1, l))
      eq.coeff[s->second] += ParamPoly::constant(s->first);
    eq.rhs = a.bracket(r, l);
    eq.src = triple_tag("jacobi", 1, r, l);
    eqs.push_back(std::move(eq));
  }

  // J(e_i, e_j, e_k) = 0 for q <= i < j < k, i + j + k = N
  for (int i = q; 3 * i < N; ++i) {
    if (!a.in_support(i)) continue;
    for (int j = i + 1; i + 2 * j < N; ++j) {
      const int k = N - i - j;
      if (!a.in_support(j) || !a.in_support(k)) continue;
      Eq eq;
      eq.coeff.assign(slots.size(), ParamPoly());
      bool nontrivial = false;
      auto add = [&](const ParamPoly& known, int x, int y) {
        if (known.is_zero()) return;
        if (auto s = signed_slot(x, y)) {
          eq.coeff[s->second] += known.scaled(Rational(s->first));
          nontrivial = true;
        }
      };
      add(a.bracket(i, j), i + j, k);
      add(a.bracket(j, k), j + k, i);
      add(a.bracket(k, i), k + i, j);
      if (!nontrivial) continue;
      eq.src = triple_tag("jacobi", i, j, k);
      eqs.push_back(std::move(eq));
    }
  }

  const std::string fresh = fresh_param_name(a);
  RatMatrix m(eqs.size(), slots.size());
  std::vector<ParamPoly> rhs(eqs.size());
  for (size_t r = 0; r < eqs.size(); ++r) {
    for (size_t c = 0; c < slots.size(); ++c) m.at(r, c) = eqs[r].coeff[c];
    rhs[r] = eqs[r].rhs;
  }
  SolveOptions opt;
  opt.constant_pivots_only = true;
  opt.free_names.assign(slots.size(), fresh);
  SolveResult sol = solve_linear(m, rhs, opt);

  if (sol.free_cols.size() > 1)
    throw std::logic_error("extension system left more than one slot free");
  for (size_t ci = 0; ci < sol.constraints.size(); ++ci)
    push_constraint(out.constraints, out.constraint_sources, sol.constraints[ci],
                    eqs[sol.constraint_rows[ci]].src);
  out.genericity = sol.genericity;

  bool constant_contradiction = false;
  for (const auto& c : out.constraints)
    if (c.is_constant()) constant_contradiction = true;
  if (constant_contradiction) {
    out.kind = ExtensionOutcome::Kind::Inconsistent;
    return out;
  }

  GradedAlgebra::Table table = a.constants();
  for (size_t c = 0; c < slots.size(); ++c) {
    if (!sol.solution[c].is_zero()) table[slots[c]] = sol.solution[c];
  }
  out.algebra = GradedAlgebra::make(q, N, std::move(table));
  if (sol.free_cols.empty()) {
    out.kind = ExtensionOutcome::Kind::Unique;
  } else {
    out.kind = ExtensionOutcome::Kind::OneParamFamily;
    out.free_slot = slots[sol.free_cols[0]];
    out.fresh_param = fresh;
  }
  return out;
}

namespace {

// Rank certificate over the rationals: true when the affine-linear subset of
// the constraints already has no common zero (over any extension field).
bool linear_subset_inconsistent(const std::vector<ParamPoly>& constraints,
                                std::vector<ParamPoly>& witness) {
  std::vector<const ParamPoly*> linear;
  std::vector<std::string> vars;
  for (const auto& c : constraints) {
    if (c.total_degree() > 1) continue;
    linear.push_back(&c);
    for (const auto& v : c.used_vars())
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  if (linear.empty()) return false;
  std::sort(vars.begin(), vars.end(), name_before);

  RatMatrix m(linear.size(), vars.size());
  std::vector<ParamPoly> rhs(linear.size());
  for (size_t r = 0; r < linear.size(); ++r) {
    ParamPoly c = *linear[r];
    for (size_t j = 0; j < vars.size(); ++j)
      m.at(r, j) = c.derivative(vars[j]);  // affine: derivative is the coefficient
    std::map<std::string, ParamPoly> zero;
    for (const auto& v : vars) zero[v] = ParamPoly();
    rhs[r] = -c.substitute(zero);
  }
  SolveResult sol = solve_linear(m, rhs);
  if (sol.kind != SolveResult::Kind::Inconsistent) return false;
  for (const auto* c : linear) witness.push_back(*c);
  return true;
}

}  // namespace

ChainResult extend_chain(const GradedAlgebra& a, int steps) {
  if (steps < 1) throw std::domain_error("extend_chain: steps must be positive");
  ChainResult res;
  GradedAlgebra cur = a;
  for (int t = 0; t < steps; ++t) {
    ExtensionOutcome out = extend_once(cur);
    res.steps.push_back(out);
    for (const auto& c : out.constraints) {
      bool known = false;
      for (const auto& k : res.accumulated) known = known || k == c;
      if (!known) res.accumulated.push_back(c);
    }
    if (out.kind == ExtensionOutcome::Kind::Inconsistent) {
      res.death = ChainResult::Death::ConstantWitness;
      res.death_step = res.steps.size() - 1;
      for (const auto& c : out.constraints)
        if (c.is_constant()) res.witness.push_back(c);
      return res;
    }
    if (linear_subset_inconsistent(res.accumulated, res.witness)) {
      res.death = ChainResult::Death::LinearCertificate;
      res.death_step = res.steps.size() - 1;
      return res;
    }
    cur = *out.algebra;
  }
  return res;
}

RatMatrix binomial_matrix(int q, int k) {
  if (k <= 2 * q) throw std::domain_error("binomial_matrix requires k > 2q");
  RatMatrix m(q, q);
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < q; ++c)
      m.at(r, c) = ParamPoly::constant(Rational(binomial(k - r + c, k - r - 1 - c)));
  return m;
}

}  // namespace maxclass
