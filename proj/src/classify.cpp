#include "maxclass/classify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

#include "maxclass/univariate.hpp"

namespace maxclass {

std::string type_name(CanonicalType t) {
  switch (t) {
    case CanonicalType::m0q:
      return "m0q";
    case CanonicalType::mq:
      return "mq";
    case CanonicalType::wittq:
      return "wittq";
    case CanonicalType::unknown:
      return "unknown";
  }
  return "unknown";
}

CanonicalType recognize_type(const GradedAlgebra& a) {
  if (!a.params().empty()) return CanonicalType::unknown;
  auto matches = [&](const GradedAlgebra& b) {
    return std::holds_alternative<IsoWitness>(graded_iso(a, b));
  };
  if (a.top() > a.q() && matches(build_m0q(a.q(), a.top()))) return CanonicalType::m0q;
  if (a.top() >= 2 * a.q() + 1 && matches(build_mq(a.q(), a.top())))
    return CanonicalType::mq;
  if (a.top() >= a.q() + 1 && matches(build_witt(a.q(), a.top())))
    return CanonicalType::wittq;
  return CanonicalType::unknown;
}

namespace {

// A parameter eliminated as a rational function of the remaining ones:
// den * param = num, with den assumed nonzero.
struct RatBinding {
  ParamPoly num, den;
};

struct ExploreState {
  GradedAlgebra cur;
  std::map<std::string, Rational> bound;
  std::map<std::string, RatBinding> rat;  // keys sorted by std::less, fine
  std::vector<ParamPoly> side;            // nonvanishing assumptions
  std::vector<std::string> used_names;    // fresh names seen along this lineage
  // Algebraic locus: the variable locus_var is constrained to the zero set of
  // this rational-root-free polynomial.  Branches entered through a
  // nonrational factor of a branch constraint carry it; residuals are then
  // compared against it by gcd, never by constructing the roots.
  std::optional<ParamPoly> locus;
  std::string locus_var;
};

// p * den^deg evaluated at var = num/den.
ParamPoly clear_substitute(const ParamPoly& p, const std::string& var,
                           const ParamPoly& num, const ParamPoly& den) {
  long d = p.degree_in(var);
  if (d <= 0) return p;
  ParamPoly out;
  for (long e = 0; e <= d; ++e) {
    ParamPoly c = p.coeff_of(var, static_cast<unsigned>(e));
    if (c.is_zero()) continue;
    out += c * num.pow(static_cast<unsigned>(e)) *
           den.pow(static_cast<unsigned>(d - e));
  }
  return out;
}

class Explorer {
 public:
  Explorer(int max_dim) : max_dim_(max_dim) {}

  BranchNode explore(const GradedAlgebra& start, const std::string& binding) {
    ExploreState st;
    st.cur = start;
    for (const auto& p : start.params()) st.used_names.push_back(p);
    BranchNode node;
    node.binding = binding;
    node.start_top = start.top();
    run(node, st);
    return node;
  }

 private:
  int max_dim_;

  ParamPoly reduce(const ParamPoly& raw, const ExploreState& st) const {
    std::map<std::string, ParamPoly> consts;
    for (const auto& [v, val] : st.bound) consts[v] = ParamPoly::constant(val);
    ParamPoly p = raw.substitute(consts);
    // eliminate rationally-bound parameters, highest name first
    for (;;) {
      std::string target;
      for (const auto& v : p.used_vars())
        if (st.rat.count(v) && (target.empty() || name_before(target, v))) target = v;
      if (target.empty()) break;
      const RatBinding& rb = st.rat.at(target);
      p = clear_substitute(p, target, rb.num, rb.den).substitute(consts);
    }
    p = p.primitive_part();
    // strip factors known nonzero on this branch
    bool changed = true;
    while (changed && !p.is_constant()) {
      changed = false;
      for (const auto& s : st.side) {
        if (s.is_constant()) continue;
        auto q = p.divide_exact(s);
        if (q) {
          p = q->primitive_part();
          changed = true;
          if (p.is_constant()) break;
        }
      }
    }
    return p;
  }

  // Binds v to a rational value and cascades rational bindings that become
  // evaluable.  Bindings whose denominator vanishes at the new point are
  // dropped; their defining constraints regenerate at the next step.
  void bind_value(ExploreState& st, const std::string& v, const Rational& val) {
    st.bound[v] = val;
    st.rat.erase(v);  // a direct value supersedes any rational binding
    std::map<std::string, ParamPoly> consts;
    consts[v] = ParamPoly::constant(val);
    for (auto& [w, rb] : st.rat) {
      rb.num = rb.num.substitute(consts);
      rb.den = rb.den.substitute(consts);
    }
    for (auto& s : st.side) s = s.substitute(consts);
    // cascade: rational bindings that became evaluable turn into values; a
    // vanished denominator drops the binding, its constraint regenerates
    for (bool changed = true; changed;) {
      changed = false;
      for (auto it = st.rat.begin(); it != st.rat.end(); ++it) {
        if (!it->second.num.is_constant() || !it->second.den.is_constant()) continue;
        const std::string name = it->first;
        const Rational nv = it->second.num.constant_value();
        const Rational dv = it->second.den.constant_value();
        st.rat.erase(it);
        if (dv != 0) bind_value(st, name, nv / dv);
        changed = true;
        break;
      }
    }
  }

  GradedAlgebra specialize(const GradedAlgebra& a,
                           const std::map<std::string, Rational>& bound) const {
    std::map<std::string, ParamPoly> consts;
    for (const auto& [v, val] : bound) consts[v] = ParamPoly::constant(val);
    return a.substituted(consts);
  }

  void finish(BranchNode& node, const ExploreState& st) {
    node.top_reached = st.cur.top();
    node.last_algebra = st.cur;
    if (st.cur.params().empty()) {
      CanonicalType t = recognize_type(st.cur);
      if (t != CanonicalType::unknown) {
        node.terminal = BranchNode::Terminal::Recognized;
        node.recognized = t;
        return;
      }
      node.terminal = BranchNode::Terminal::OpenFamily;
      node.note = "parameter-free but not a canonical type";
      return;
    }
    node.terminal = BranchNode::Terminal::OpenFamily;
    node.note = "cut off at max_dim with parameters " +
                [&] {
                  std::string s;
                  for (const auto& p : st.cur.params()) s += (s.empty() ? "" : ",") + p;
                  return s;
                }();
  }

  void run(BranchNode& node, ExploreState st) {
    for (;;) {
      if (st.cur.top() >= max_dim_) {
        finish(node, st);
        return;
      }
      ExtensionOutcome out = extend_once(st.cur);
      if (out.kind == ExtensionOutcome::Kind::OneParamFamily) {
        // keep fresh names unique along the lineage so old bindings never
        // collide with a reused name
        std::string fresh = out.fresh_param;
        if (std::find(st.used_names.begin(), st.used_names.end(), fresh) !=
            st.used_names.end()) {
          for (int i = 1;; ++i) {
            std::string cand = "b" + std::to_string(i);
            if (std::find(st.used_names.begin(), st.used_names.end(), cand) ==
                    st.used_names.end() &&
                std::find(out.algebra->params().begin(), out.algebra->params().end(),
                          cand) == out.algebra->params().end()) {
              fresh = cand;
              break;
            }
          }
          std::map<std::string, ParamPoly> ren{
              {out.fresh_param, ParamPoly::variable(fresh)}};
          out.algebra = out.algebra->substituted(ren);
          for (auto& c : out.constraints) c = c.substitute(ren);
          out.fresh_param = fresh;
        }
        st.used_names.push_back(fresh);
      }

      const int level = st.cur.top() + 1;
      for (size_t ci = 0; ci < out.constraints.size(); ++ci) {
        ParamPoly p = reduce(out.constraints[ci], st);
        if (p.is_zero()) continue;
        ConstraintEvent ev;
        ev.level = level;
        ev.source = out.constraint_sources[ci];
        ev.raw = out.constraints[ci];
        ev.reduced = p;
        if (p.is_constant()) {
          ev.action = "dead";
          node.events.push_back(ev);
          node.terminal = BranchNode::Terminal::DeadEnd;
          node.top_reached = st.cur.top();
          node.last_algebra = st.cur;
          node.witness = {out.constraints[ci]};
          std::ostringstream os;
          os << "constraint " << ev.source << " has no zero on this branch";
          node.note = os.str();
          return;
        }
        std::vector<std::string> uv = p.used_vars();
        if (uv.size() == 1 && st.locus && uv[0] == st.locus_var) {
          // constrained to the locus: decide by gcd, exactly
          ParamPoly g = poly_gcd(*st.locus, p);
          if (g.is_constant()) {
            ev.action = "dead";
            ev.detail = "coprime with the locus " + st.locus->str();
            node.events.push_back(ev);
            node.terminal = BranchNode::Terminal::DeadEnd;
            node.top_reached = st.cur.top();
            node.last_algebra = st.cur;
            node.witness = {*st.locus, p};
            node.note = "constraint " + ev.source +
                        " is coprime with the locus: gcd = 1, no common zero";
            return;
          }
          if (ParamPoly::proportional(g, *st.locus)) continue;  // vanishes on locus
          if (!rational_roots(g).empty()) {
            // refinement exposed rational points; handle them as a branch
            ev.action = "branch";
            ev.detail = "locus refined to " + g.str();
            node.events.push_back(ev);
            branch(node, st, out, uv[0], g.primitive_part());
            return;
          }
          ev.action = "locus-refined";
          ev.detail = g.str();
          node.events.push_back(ev);
          st.locus = g.primitive_part();
          continue;
        }
        if (uv.size() == 1) {
          const std::string v = uv[0];
          if (p.degree_in(v) == 1) {
            Rational root = -p.coeff_of(v, 0).constant_value() /
                            p.coeff_of(v, 1).constant_value();
            ev.action = "bound";
            ev.detail = v + " = " + rat_str(root);
            node.events.push_back(ev);
            bind_value(st, v, root);
            continue;
          }
          // branch point: every rational root, then the leftover factor
          ev.action = "branch";
          node.events.push_back(ev);
          branch(node, st, out, v, p);
          return;
        }
        // multivariate: eliminate the highest variable it is linear in
        std::string target;
        for (const auto& v : uv)
          if (p.degree_in(v) == 1 && (target.empty() || name_before(target, v)))
            target = v;
        if (!target.empty()) {
          RatBinding rb;
          rb.den = p.coeff_of(target, 1);
          rb.num = -p.coeff_of(target, 0);
          if (st.locus && rb.den.uses(st.locus_var)) {
            // dividing by the coefficient is only sound where it is nonzero,
            // so it must be separated from the locus first
            std::vector<std::string> dv = rb.den.used_vars();
            bool separated = dv.size() == 1 && dv[0] == st.locus_var &&
                             poly_gcd(rb.den, *st.locus).is_constant();
            if (!separated) {
              node.terminal = BranchNode::Terminal::OpenFamily;
              node.top_reached = st.cur.top();
              node.last_algebra = st.cur;
              node.note = "elimination denominator meets the locus; undecided";
              return;
            }
          }
          ev.action = "rational-bound";
          ev.detail = target + " = (" + rb.num.str() + ") / (" + rb.den.str() + ")";
          node.events.push_back(ev);
          st.side.push_back(rb.den.primitive_part());
          st.rat.emplace(target, std::move(rb));
          continue;
        }
        ev.action = "pending";
        node.events.push_back(ev);
      }

      if (out.kind == ExtensionOutcome::Kind::Inconsistent) {
        // all-constant contradictions were caught above; reaching here means
        // the constraint list was emptied by the bindings, which cannot
        // happen for a constant witness
        throw std::logic_error("inconsistent outcome without constant witness");
      }
      st.cur = specialize(*out.algebra, st.bound);
    }
  }

  void branch(BranchNode& node, const ExploreState& st, const ExtensionOutcome& out,
              const std::string& v, const ParamPoly& p) {
    (void)out;
    node.branch_poly = p;
    node.top_reached = st.cur.top();
    node.last_algebra = st.cur;
    node.branch_roots = rational_roots(p);

    ParamPoly factor = p;
    for (const auto& r : node.branch_roots) {
      for (;;) {
        ParamPoly lin = ParamPoly::variable(v) - ParamPoly::constant(r);
        auto q = factor.divide_exact(lin);
        if (!q) break;
        factor = *q;
      }
    }
    factor = factor.primitive_part();
    node.residual_factor = factor;

    for (const auto& r : node.branch_roots) {
      ExploreState child = st;
      child.rat.clear();
      child.side.clear();
      bind_like(child, st, v, r);
      BranchNode cn;
      cn.binding = v + " = " + rat_str(r);
      cn.start_top = st.cur.top();
      GradedAlgebra spec = specialize(st.cur, child.bound);
      bool dead = false;
      for (const auto& viol : jacobi_check(spec)) {
        if (viol.residual.is_constant()) {
          cn.terminal = BranchNode::Terminal::DeadEnd;
          cn.top_reached = spec.top();
          cn.witness = {viol.residual};
          std::ostringstream os;
          os << "specialized table fails Jacobi at (" << viol.i << "," << viol.j
             << "," << viol.k << ")";
          cn.note = os.str();
          dead = true;
          break;
        }
      }
      if (!dead) {
        child.cur = spec;
        run(cn, child);
      }
      node.children.push_back(std::move(cn));
    }

    if (!factor.is_constant()) {
      // follow the nonrational locus symbolically; residual constraints are
      // compared against the factor by gcd at every later level
      BranchNode cn;
      cn.binding = factor.str() + " = 0";
      cn.start_top = st.cur.top();
      cn.top_reached = st.cur.top();
      bool sides_ok = true;
      for (const auto& s : st.side) {
        if (s.is_constant()) continue;
        std::vector<std::string> uv = s.used_vars();
        if (uv.size() == 1 && uv[0] == v && !poly_gcd(factor, s).is_constant())
          sides_ok = false;
      }
      if (!sides_ok) {
        cn.terminal = BranchNode::Terminal::OpenFamily;
        cn.note = "a denominator side condition meets the locus; not separable";
      } else {
        ExploreState child = st;
        child.locus = factor;
        child.locus_var = v;
        run(cn, child);
      }
      node.children.push_back(std::move(cn));
    }
  }

  // Rebuilds the child's bound map from the parent rational bindings at v = r.
  void bind_like(ExploreState& child, const ExploreState& parent,
                 const std::string& v, const Rational& r) {
    child.bound = parent.bound;
    child.bound[v] = r;
    // evaluate parent rational bindings in ascending name order (dependencies
    // point downward); vanishing denominators leave the parameter symbolic
    std::vector<std::pair<std::string, RatBinding>> items(parent.rat.begin(),
                                                          parent.rat.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
      return name_before(a.first, b.first);
    });
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [w, rb] : items) {
        if (child.bound.count(w)) continue;
        std::map<std::string, ParamPoly> consts;
        for (const auto& [x, val] : child.bound) consts[x] = ParamPoly::constant(val);
        ParamPoly nv = rb.num.substitute(consts);
        ParamPoly dv = rb.den.substitute(consts);
        if (!nv.is_constant() || !dv.is_constant()) continue;
        if (dv.constant_value() == 0) continue;  // binding invalid here
        child.bound[w] = nv.constant_value() / dv.constant_value();
        changed = true;
      }
    }
    // keep only side conditions that stay meaningful
    for (const auto& s : parent.side) {
      std::map<std::string, ParamPoly> consts;
      for (const auto& [x, val] : child.bound) consts[x] = ParamPoly::constant(val);
      ParamPoly sv = s.substitute(consts);
      if (!sv.is_constant()) child.side.push_back(sv.primitive_part());
    }
  }
};

// Runs the independent branch explorations with at most `threads` in flight;
// results are joined in task order, so the tree is identical for any count.
template <typename Task>
std::vector<BranchNode> run_parallel(std::vector<Task>& tasks, int threads) {
  std::vector<BranchNode> out(tasks.size());
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  const size_t width = static_cast<size_t>(threads);
  for (size_t base = 0; base < tasks.size(); base += width) {
    std::vector<std::future<BranchNode>> futs;
    for (size_t i = base; i < std::min(tasks.size(), base + width); ++i)
      futs.push_back(std::async(std::launch::async, tasks[i]));
    for (size_t i = 0; i < futs.size(); ++i) out[base + i] = futs[i].get();
  }
  return out;
}

std::vector<Rational> family_slot_values(const GradedAlgebra& a, int k) {
  std::vector<Rational> out;
  for (int l = 1; 2 * (k + l) + 1 <= a.top(); ++l) {
    ParamPoly v = a.bracket(k + l, k + l + 1);
    if (!v.is_constant()) break;
    out.push_back(v.constant_value());
  }
  return out;
}

void count_terminals(const BranchNode& n, ClassifySummary& s) {
  switch (n.terminal) {
    case BranchNode::Terminal::DeadEnd:
      s.dead_branches++;
      break;
    case BranchNode::Terminal::OpenFamily:
      s.open_branches++;
      break;
    case BranchNode::Terminal::Recognized:
      s.survivors.push_back(n.recognized);
      break;
    case BranchNode::Terminal::Interior:
      break;
  }
  for (const auto& c : n.children) count_terminals(c, s);
}

const BranchNode* find_branch_point(const BranchNode& n) {
  if (!n.branch_poly.is_zero()) return &n;
  for (const auto& c : n.children)
    if (const BranchNode* f = find_branch_point(c)) return f;
  return nullptr;
}

void collect_leaves(const BranchNode& n, std::vector<const BranchNode*>& out) {
  if (n.children.empty()) {
    out.push_back(&n);
    return;
  }
  for (const auto& c : n.children) collect_leaves(c, out);
}

// The three vanishing conditions of the k = 6 dead end, straight from the
// closed family tables: lambda_{3,13}, lambda_{3,14}, lambda_{3,15}.
std::vector<ParamPoly> k6_conditions() {
  ParamPoly b1 = ParamPoly::variable("b1"), b2 = ParamPoly::variable("b2");
  std::vector<ParamPoly> out;
  out.push_back(build_extension_family(3, 6, 4, {b1}).bracket(3, 13).primitive_part());
  out.push_back(
      build_extension_family(3, 6, 5, {b1, b2}).bracket(3, 14).primitive_part());
  out.push_back(
      build_extension_family(3, 6, 6, {b1, b2}).bracket(3, 15).primitive_part());
  return out;
}

}  // namespace

ClassifyResult classify_q3(int max_dim, int threads) {
  if (max_dim < 16) throw std::domain_error("classify_q3 requires max_dim >= 16");
  const int q = 3;

  ClassifyResult res;
  res.root.binding = "m^3_0(6)";
  res.root.start_top = 6;

  struct FamilyStart {
    int k;
    GradedAlgebra algebra;
  };
  std::vector<FamilyStart> starts;

  GradedAlgebra spine = build_m0q(q, 6);
  while (spine.top() < max_dim) {
    ExtensionOutcome out = extend_once(spine);
    if (!out.constraints.empty())
      throw std::logic_error("spine extension produced constraints");
    if (out.kind == ExtensionOutcome::Kind::OneParamFamily) {
      const int k = spine.top() / 2;
      starts.push_back(
          {k, out.algebra->substituted(
                  {{out.fresh_param, ParamPoly::constant(1)}})});
      spine = out.algebra->substituted({{out.fresh_param, ParamPoly()}});
    } else {
      spine = *out.algebra;
    }
  }
  if (recognize_type(spine) != CanonicalType::m0q)
    throw std::logic_error("spine did not stay m^3_0");

  std::vector<std::function<BranchNode()>> tasks;
  for (const auto& fs : starts) {
    tasks.push_back([fs, max_dim]() {
      Explorer ex(max_dim);
      std::ostringstream os;
      os << "k=" << fs.k << ", b = 1";
      return ex.explore(fs.algebra, os.str());
    });
  }
  std::vector<BranchNode> children = run_parallel(tasks, threads);
  for (auto& c : children) res.root.children.push_back(std::move(c));
  res.root.top_reached = spine.top();
  res.root.terminal = BranchNode::Terminal::Recognized;
  res.root.recognized = CanonicalType::m0q;
  res.root.last_algebra = spine;

  ClassifySummary& s = res.summary;
  s.q = q;
  s.max_dim = max_dim;
  count_terminals(res.root, s);
  std::sort(s.survivors.begin(), s.survivors.end());
  s.survivors.erase(std::unique(s.survivors.begin(), s.survivors.end()),
                    s.survivors.end());

  if (const BranchNode* bp = find_branch_point(res.root)) {
    s.branch_poly = bp->branch_poly;
    s.branch_roots = bp->branch_roots;
    s.irrational_factor = bp->residual_factor;
    for (const auto& c : bp->children) {
      if (c.binding == "b1 = 1/7" && c.last_algebra)
        s.witt_branch_betas = family_slot_values(*c.last_algebra, 3);
    }
  }
  for (const auto& c : res.root.children) {
    int k = (c.start_top - 1) / 2;
    if (k < 4 || k > 6 || !c.last_algebra) continue;
    std::vector<Rational> vals = family_slot_values(*c.last_algebra, k);
    if (k == 4) s.k4_bindings = vals;
    if (k == 5) s.k5_bindings = vals;
    if (k == 6) {
      s.k6_bindings = vals;
      s.k6_system = k6_conditions();
    }
  }
  return res;
}

MainTheoremResult verify_main_theorem(int q, int max_dim, int threads) {
  if (q < 3) throw std::domain_error("verify_main_theorem requires q >= 3");
  if (max_dim < 4 * q + 4)
    throw std::domain_error("verify_main_theorem requires max_dim >= 4q+4");

  MainTheoremResult res;
  res.q = q;
  res.max_dim = max_dim;
  res.root.binding = "m^q_0(2q) under the vanishing hypothesis";
  res.root.start_top = 2 * q;

  struct Deviation {
    int l;
    GradedAlgebra algebra;
  };
  std::vector<Deviation> devs;

  GradedAlgebra spine = build_m0q(q, 2 * q);
  while (spine.top() < max_dim) {
    ExtensionOutcome out = extend_once(spine);
    if (out.kind == ExtensionOutcome::Kind::OneParamFamily) {
      const int l = spine.top() / 2;
      if (l <= 2 * q) {
        res.hypothesis_forced_levels.push_back(2 * l + 1);
      } else {
        devs.push_back({l, out.algebra->substituted(
                               {{out.fresh_param, ParamPoly::constant(1)}})});
      }
      spine = out.algebra->substituted({{out.fresh_param, ParamPoly()}});
    } else {
      spine = *out.algebra;
    }
  }
  res.spine_matches_m0q = spine.same_table(build_m0q(q, max_dim));

  std::vector<std::function<BranchNode()>> tasks;
  for (const auto& d : devs) {
    tasks.push_back([d, max_dim]() {
      Explorer ex(max_dim);
      std::ostringstream os;
      os << "deviation at l=" << d.l << " (b = 1)";
      return ex.explore(d.algebra, os.str());
    });
  }
  std::vector<BranchNode> children = run_parallel(tasks, threads);

  res.unique_survivor = res.spine_matches_m0q;
  for (size_t i = 0; i < children.size(); ++i) {
    DeviationReport rep;
    rep.l = devs[i].l;
    const int predicted_death = 2 * devs[i].l + 2 * q;
    // a deviation may branch on the roots of a univariate constraint; it is
    // dead when every branch is, and the longest-lived branch must fail
    // exactly at the predicted degree
    std::vector<const BranchNode*> leaves;
    collect_leaves(children[i], leaves);
    bool all_dead = !leaves.empty();
    bool any_open = false;
    int max_death = 0;
    for (const BranchNode* leaf : leaves) {
      if (leaf->terminal == BranchNode::Terminal::DeadEnd) {
        max_death = std::max(max_death, leaf->top_reached + 1);
        for (const auto& w : leaf->witness) rep.witness.push_back(w);
      } else {
        all_dead = false;
        any_open = any_open || leaf->terminal == BranchNode::Terminal::OpenFamily;
      }
    }
    if (all_dead) {
      rep.died = true;
      rep.death_top = max_death;
      if (rep.death_top != predicted_death) res.unique_survivor = false;
    } else if (any_open && predicted_death > max_dim) {
      rep.truncated = true;
    } else {
      res.unique_survivor = false;
    }
    res.deviations.push_back(rep);
    res.root.children.push_back(std::move(children[i]));
  }
  res.root.top_reached = max_dim;
  res.root.terminal = BranchNode::Terminal::Recognized;
  res.root.recognized = CanonicalType::m0q;
  return res;
}

BranchNode explore_family_chain(const GradedAlgebra& start, int max_dim,
                                const std::string& binding_label) {
  Explorer ex(max_dim);
  return ex.explore(start, binding_label);
}

std::vector<KLemmaReport> verify_k_lemmas() {
  std::vector<KLemmaReport> out;
  for (int k : {4, 5, 6}) {
    Explorer ex(20);
    std::ostringstream os;
    os << "m^3_{0,1}(" << 2 * k + 1 << "), b = 1";
    BranchNode node = ex.explore(build_extension_family(3, k, 1, {}), os.str());
    KLemmaReport rep;
    rep.k = k;
    rep.node = node;
    if (node.last_algebra) rep.bindings = family_slot_values(*node.last_algebra, k);
    rep.died = node.terminal == BranchNode::Terminal::DeadEnd;
    rep.death_top = node.top_reached + 1;
    rep.witness = node.witness;
    if (k == 6) {
      rep.condition_log = k6_conditions();
    } else {
      for (const auto& ev : node.events)
        if (ev.action == "bound" || ev.action == "dead")
          rep.condition_log.push_back(ev.raw);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace maxclass
