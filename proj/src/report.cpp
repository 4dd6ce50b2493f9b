#include "maxclass/report.hpp"

#include <sstream>

#include "maxclass/liealg.hpp"

namespace maxclass {

namespace {

const char* kind_name(ExtensionOutcome::Kind k) {
  switch (k) {
    case ExtensionOutcome::Kind::Unique:
      return "Unique";
    case ExtensionOutcome::Kind::OneParamFamily:
      return "OneParamFamily";
    case ExtensionOutcome::Kind::Inconsistent:
      return "Inconsistent";
  }
  return "?";
}

const char* terminal_name(BranchNode::Terminal t) {
  switch (t) {
    case BranchNode::Terminal::Interior:
      return "Interior";
    case BranchNode::Terminal::DeadEnd:
      return "DeadEnd";
    case BranchNode::Terminal::Recognized:
      return "RecognizedType";
    case BranchNode::Terminal::OpenFamily:
      return "OpenFamily";
  }
  return "?";
}

}  // namespace

std::string render_outcome(const ExtensionOutcome& out, bool structured) {
  std::ostringstream os;
  if (structured) {
    os << "outcome kind=" << kind_name(out.kind);
    if (out.free_slot)
      os << " free_slot=(" << out.free_slot->first << "," << out.free_slot->second
         << ") param=" << out.fresh_param;
    if (out.algebra) os << " top=" << out.algebra->top();
    os << "\n";
    for (size_t i = 0; i < out.constraints.size(); ++i)
      os << "constraint source=" << out.constraint_sources[i]
         << " poly=" << out.constraints[i].str() << "\n";
    for (const auto& g : out.genericity) os << "genericity poly=" << g.str() << "\n";
    if (out.algebra) {
      std::istringstream alg(emit_algebra(*out.algebra));
      std::string line;
      while (std::getline(alg, line)) os << "algebra " << line << "\n";
    }
  } else {
    os << kind_name(out.kind);
    if (out.free_slot)
      os << ", new parameter " << out.fresh_param << " at lambda("
         << out.free_slot->first << "," << out.free_slot->second << ")";
    os << "\n";
    for (size_t i = 0; i < out.constraints.size(); ++i)
      os << "  requires " << out.constraint_sources[i] << ": "
         << out.constraints[i].str() << " = 0\n";
  }
  return os.str();
}

std::string render_chain(const ChainResult& chain, bool structured) {
  std::ostringstream os;
  for (size_t i = 0; i < chain.steps.size(); ++i) {
    if (structured) os << "step index=" << i << " ";
    else os << "step " << i + 1 << ": ";
    os << render_outcome(chain.steps[i], structured);
  }
  if (chain.death != ChainResult::Death::None) {
    os << (structured ? "death kind=" : "chain stops: ");
    os << (chain.death == ChainResult::Death::ConstantWitness
               ? "constant-witness"
               : "linear-certificate");
    os << (structured ? " step=" : " at step ") << chain.death_step << "\n";
    for (const auto& w : chain.witness)
      os << (structured ? "witness poly=" : "  witness ") << w.str() << "\n";
  }
  return os.str();
}

std::string render_branch(const BranchNode& node, bool structured,
                          const std::string& path, int indent) {
  std::ostringstream os;
  if (structured) {
    os << "node path=" << path << " binding=\"" << node.binding << "\""
       << " start_top=" << node.start_top << " top=" << node.top_reached
       << " terminal=" << terminal_name(node.terminal);
    if (node.terminal == BranchNode::Terminal::Recognized)
      os << " type=" << type_name(node.recognized);
    if (!node.note.empty()) os << " note=\"" << node.note << "\"";
    os << "\n";
    for (const auto& ev : node.events)
      os << "event path=" << path << " level=" << ev.level << " source=" << ev.source
         << " action=" << ev.action
         << (ev.detail.empty() ? "" : " detail=\"" + ev.detail + "\"")
         << " reduced=" << ev.reduced.str() << "\n";
    if (!node.branch_poly.is_zero()) {
      os << "branch path=" << path << " poly=" << node.branch_poly.str() << " roots=";
      for (size_t i = 0; i < node.branch_roots.size(); ++i)
        os << (i ? "," : "") << rat_str(node.branch_roots[i]);
      os << " factor=" << node.residual_factor.str() << "\n";
    }
    for (const auto& w : node.witness)
      os << "witness path=" << path << " poly=" << w.str() << "\n";
    for (size_t i = 0; i < node.children.size(); ++i)
      os << render_branch(node.children[i], structured,
                          path + "." + std::to_string(i), indent + 1);
  } else {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    os << pad << node.binding << "  [top " << node.start_top << " -> "
       << node.top_reached << "]  " << terminal_name(node.terminal);
    if (node.terminal == BranchNode::Terminal::Recognized)
      os << "(" << type_name(node.recognized) << ")";
    if (!node.note.empty()) os << "  -- " << node.note;
    os << "\n";
    for (const auto& ev : node.events) {
      if (ev.action == "bound" || ev.action == "rational-bound")
        os << pad << "  at degree " << ev.level << ", " << ev.source << ": "
           << ev.detail << "\n";
      else if (ev.action == "dead" || ev.action == "branch")
        os << pad << "  at degree " << ev.level << ", " << ev.source << " "
           << ev.action << ": " << ev.reduced.str() << "\n";
    }
    if (!node.branch_poly.is_zero()) {
      os << pad << "  branch constraint: " << node.branch_poly.str() << "\n";
      os << pad << "  rational roots:";
      for (const auto& r : node.branch_roots) os << " " << rat_str(r);
      if (!node.residual_factor.is_constant())
        os << "; leftover factor " << node.residual_factor.str();
      os << "\n";
    }
    for (size_t i = 0; i < node.children.size(); ++i)
      os << render_branch(node.children[i], structured, path, indent + 1);
  }
  return os.str();
}

std::string render_classify(const ClassifyResult& res, bool structured) {
  std::ostringstream os;
  os << render_branch(res.root, structured);
  const ClassifySummary& s = res.summary;
  if (structured) {
    os << "summary q=" << s.q << " max_dim=" << s.max_dim << " survivors=";
    for (size_t i = 0; i < s.survivors.size(); ++i)
      os << (i ? "," : "") << type_name(s.survivors[i]);
    os << " dead=" << s.dead_branches << " open=" << s.open_branches << "\n";
    if (!s.branch_poly.is_zero()) {
      os << "summary branch_poly=" << s.branch_poly.str() << "\n";
      os << "summary branch_roots=";
      for (size_t i = 0; i < s.branch_roots.size(); ++i)
        os << (i ? "," : "") << rat_str(s.branch_roots[i]);
      os << "\n";
      os << "summary irrational_factor=" << s.irrational_factor.str() << "\n";
    }
    auto emit_vals = [&os](const char* key, const std::vector<Rational>& v) {
      if (v.empty()) return;
      os << "summary " << key << "=";
      for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_str(v[i]);
      os << "\n";
    };
    emit_vals("witt_branch_betas", s.witt_branch_betas);
    emit_vals("k4_bindings", s.k4_bindings);
    emit_vals("k5_bindings", s.k5_bindings);
    emit_vals("k6_bindings", s.k6_bindings);
    for (const auto& c : s.k6_system) os << "summary k6_condition=" << c.str() << "\n";
  } else {
    os << "\n" << s.survivors.size() << " surviving types:";
    for (const auto& t : s.survivors) os << " " << type_name(t);
    os << "\n";
    os << "dead branches: " << s.dead_branches
       << ", open (cut off at max_dim): " << s.open_branches << "\n";
  }
  return os.str();
}

std::string render_main_theorem(const MainTheoremResult& res, bool structured) {
  std::ostringstream os;
  if (structured) {
    os << "maintheorem q=" << res.q << " max_dim=" << res.max_dim
       << " spine_matches_m0q=" << (res.spine_matches_m0q ? "true" : "false")
       << " unique_survivor=" << (res.unique_survivor ? "true" : "false") << "\n";
    os << "hypothesis_forced_levels=";
    for (size_t i = 0; i < res.hypothesis_forced_levels.size(); ++i)
      os << (i ? "," : "") << res.hypothesis_forced_levels[i];
    os << "\n";
    for (const auto& d : res.deviations) {
      os << "deviation l=" << d.l << " died=" << (d.died ? "true" : "false")
         << " death_top=" << d.death_top
         << " truncated=" << (d.truncated ? "true" : "false") << "\n";
    }
    os << render_branch(res.root, structured);
  } else {
    os << "Main theorem check for q=" << res.q << " up to degree " << res.max_dim
       << "\n";
    os << "spine stays m^q_0: " << (res.spine_matches_m0q ? "yes" : "NO") << "\n";
    for (const auto& d : res.deviations) {
      os << "  deviation at m^q_{0,1}(" << 2 * d.l + 1 << "): ";
      if (d.died) os << "dies attaching degree " << d.death_top;
      else if (d.truncated) os << "cut off by max_dim before the predicted death";
      else os << "UNEXPECTEDLY ALIVE";
      os << "\n";
    }
    os << (res.unique_survivor ? "unique surviving chain: m^q_0"
                               : "SURVIVOR CHECK FAILED")
       << "\n";
  }
  return os.str();
}

std::string render_k_lemmas(const std::vector<KLemmaReport>& reps, bool structured) {
  std::ostringstream os;
  for (const auto& rep : reps) {
    if (structured) {
      os << "klemma k=" << rep.k << " died=" << (rep.died ? "true" : "false")
         << " death_top=" << rep.death_top << " bindings=";
      for (size_t i = 0; i < rep.bindings.size(); ++i)
        os << (i ? "," : "") << rat_str(rep.bindings[i]);
      os << "\n";
      for (const auto& c : rep.condition_log)
        os << "klemma k=" << rep.k << " condition=" << c.str() << "\n";
      for (const auto& w : rep.witness)
        os << "klemma k=" << rep.k << " witness=" << w.str() << "\n";
    } else {
      os << "k=" << rep.k << ": ";
      if (rep.died) os << "dead end attaching degree " << rep.death_top;
      else os << "NOT DEAD";
      if (!rep.bindings.empty()) {
        os << ", forced parameters";
        for (const auto& b : rep.bindings) os << " " << rat_str(b);
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace maxclass
