// maxclass: exact engine for N-graded filiform Lie algebras of maximal class
// and the quadratic parameter-space systems M_n.
//
// Exit codes: 0 = the checked statement holds, 1 = a mathematical failure was
// found (Jacobi violation, inconsistent extension, singular matrix, failed
// classification), 2 = usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "maxclass/classify.hpp"
#include "maxclass/extend.hpp"
#include "maxclass/liealg.hpp"
#include "maxclass/report.hpp"
#include "maxclass/varieties.hpp"

using namespace maxclass;

namespace {

int thread_budget() {
  const char* env = std::getenv("MAXCLASS_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  if (v == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  return v < 1 ? 1 : v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << body;
}

std::set<int> parse_int_list(const std::string& csv) {
  std::set<int> out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) out.insert(std::stoi(item));
  return out;
}

std::map<std::string, Rational> parse_point(const std::string& text) {
  std::map<std::string, Rational> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("point entries must look like var=value");
    std::string name = item.substr(0, eq);
    out[name] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for graded filiform Lie algebras and the M_n systems"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "human";
  std::string out_dir;
  unsigned long long seed = 0;
  app.add_option("--format", format, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--out", out_dir, "output directory for emitted files");
  app.add_option("--seed", seed, "seed echoed into structured reports");

  std::string algebra_file;
  int steps = 1, q = 3, n = 9, k = 7, max_dim = 30;
  std::string keep_weights, zero_weights, point_text, action;

  CLI::App* cmd_jacobi = app.add_subcommand("jacobi", "check the Jacobi identity of an algebra file");
  cmd_jacobi->add_option("file", algebra_file)->required();

  CLI::App* cmd_extend = app.add_subcommand("extend", "run the central-extension chain");
  cmd_extend->add_option("file", algebra_file)->required();
  cmd_extend->add_option("--steps", steps)->check(CLI::PositiveNumber);

  CLI::App* cmd_classify = app.add_subcommand("classify", "classify the q=3 chains up to a degree bound");
  cmd_classify->add_option("--q", q);
  cmd_classify->add_option("--max-dim", max_dim);

  CLI::App* cmd_main = app.add_subcommand("maintheorem", "verify the vanishing-hypothesis theorem at desk scale");
  cmd_main->add_option("--q", q);
  cmd_main->add_option("--max-dim", max_dim);

  CLI::App* cmd_klemmas = app.add_subcommand("klemmas", "reproduce the k = 4, 5, 6 dead ends");

  CLI::App* cmd_variety = app.add_subcommand("variety", "generate and inspect the M_n systems");
  cmd_variety->add_option("action", action, "emit | restrict | jacobian | eval")->required();
  cmd_variety->add_option("--n", n)->required();
  cmd_variety->add_option("--keep-weights", keep_weights, "zero all other weights");
  cmd_variety->add_option("--zero-weights", zero_weights, "weights to zero");
  cmd_variety->add_option("--point", point_text, "semicolon list var=value");

  CLI::App* cmd_matrix = app.add_subcommand("matrix", "binomial obstruction matrix and its determinant");
  cmd_matrix->add_option("--q", q);
  cmd_matrix->add_option("--k", k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool structured = format == "structured";
  const int threads = thread_budget();

  try {
    if (structured) {
      std::ostringstream cfg;
      cfg << "config command=" << app.get_subcommands()[0]->get_name()
          << " seed=" << seed << "\n";
      std::cout << cfg.str();
    }

    if (*cmd_jacobi) {
      GradedAlgebra a = parse_algebra(slurp(algebra_file));
      auto viols = jacobi_check(a);
      if (viols.empty()) {
        std::cout << (structured ? "jacobi result=LIE_ALGEBRA\n" : "LIE ALGEBRA\n");
        return 0;
      }
      for (const auto& v : viols)
        std::cout << (structured ? "violation triple=" : "violation at ") << "("
                  << v.i << "," << v.j << "," << v.k << ")"
                  << (structured ? " residual=" : ": ") << v.residual.str() << "\n";
      return 1;
    }

    if (*cmd_extend) {
      GradedAlgebra a = parse_algebra(slurp(algebra_file));
      ChainResult chain = extend_chain(a, steps);
      std::cout << render_chain(chain, structured);
      if (!out_dir.empty()) {
        for (size_t i = 0; i < chain.steps.size(); ++i) {
          if (!chain.steps[i].algebra) continue;
          std::ostringstream name;
          name << out_dir << "/step" << i + 1 << ".alg";
          spit(name.str(), emit_algebra(*chain.steps[i].algebra));
        }
      }
      return chain.death == ChainResult::Death::None ? 0 : 1;
    }

    if (*cmd_classify) {
      if (q != 3) throw std::runtime_error("classification is implemented for q=3");
      ClassifyResult res = classify_q3(max_dim, threads);
      std::cout << render_classify(res, structured);
      const std::vector<CanonicalType> expect{CanonicalType::m0q, CanonicalType::mq,
                                              CanonicalType::wittq};
      return res.summary.survivors == expect ? 0 : 1;
    }

    if (*cmd_main) {
      MainTheoremResult res = verify_main_theorem(q, max_dim, threads);
      std::cout << render_main_theorem(res, structured);
      return res.unique_survivor ? 0 : 1;
    }

    if (*cmd_klemmas) {
      auto reps = verify_k_lemmas();
      std::cout << render_k_lemmas(reps, structured);
      for (const auto& r : reps)
        if (!r.died) return 1;
      return 0;
    }

    if (*cmd_variety) {
      PolySystem sys = assemble_system(n);
      if (action == "emit") {
        std::cout << emit_system(sys);
        return 0;
      }
      if (action == "restrict") {
        if (!keep_weights.empty()) {
          std::set<int> keep = parse_int_list(keep_weights);
          std::set<int> zero;
          zero.insert(-1);
          for (int w = 0; w <= n - 5; ++w)
            if (!keep.count(w)) zero.insert(w);
          if (keep.count(-1)) zero.erase(-1);
          sys = restrict_weights(sys, zero);
        } else if (!zero_weights.empty()) {
          sys = restrict_weights(sys, parse_int_list(zero_weights));
        } else {
          throw std::runtime_error("restrict needs --keep-weights or --zero-weights");
        }
        std::cout << emit_system(sys);
        return 0;
      }
      if (action == "jacobian") {
        RatMatrix jm = jacobian(sys);
        std::cout << "# columns:";
        for (const auto& v : sys.vars) std::cout << " " << v;
        std::cout << "\n" << jm.str();
        return 0;
      }
      if (action == "eval") {
        std::vector<Rational> res = eval_point(sys, parse_point(point_text));
        bool on_variety = true;
        for (size_t i = 0; i < res.size(); ++i) {
          std::cout << sys.polys[i].label << " = " << rat_str(res[i]) << "\n";
          on_variety = on_variety && res[i] == 0;
        }
        std::cout << (on_variety ? "ON VARIETY\n" : "OFF VARIETY\n");
        return 0;
      }
      throw std::runtime_error("unknown variety action: " + action);
    }

    if (*cmd_matrix) {
      RatMatrix m = binomial_matrix(q, k);
      ParamPoly d = det(m);
      std::cout << m.str();
      std::cout << (structured ? "det=" : "determinant: ") << d.str() << "\n";
      if (!d.is_zero()) {
        std::cout << (structured ? "nonsingular=true\n" : "nonsingular\n");
        return 0;
      }
      std::cout << (structured ? "nonsingular=false\n" : "SINGULAR\n");
      return 1;
    }
  } catch (const AlgebraParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
