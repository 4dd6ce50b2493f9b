#include "maxclass/liealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace maxclass {

namespace {

std::vector<int> make_support(int q, int top) {
  std::vector<int> s{1};
  for (int d = q; d <= top; ++d) s.push_back(d);
  return s;
}

}  // namespace

GradedAlgebra GradedAlgebra::make(int q, int top, Table constants) {
  if (q < 2) throw std::domain_error("q must be at least 2");
  if (top < q) throw std::domain_error("top must be at least q");
  GradedAlgebra a;
  a.q_ = q;
  a.top_ = top;
  a.support_ = make_support(q, top);
  std::set<std::string> params;
  for (auto it = constants.begin(); it != constants.end();) {
    auto [i, j] = it->first;
    if (it->second.is_zero()) {
      it = constants.erase(it);
      continue;
    }
    if (i >= j) throw std::domain_error("constant pair must have i < j");
    if (i < q) throw std::domain_error("constant pair below q (derivation row is implied)");
    if (!a.in_support(i) || !a.in_support(j))
      throw std::domain_error("constant pair outside support");
    if (i + j > top || !a.in_support(i + j))
      throw std::domain_error("bracket target outside support");
    for (const auto& v : it->second.used_vars()) params.insert(v);
    it->second = it->second.pruned();
    ++it;
  }
  a.constants_ = std::move(constants);
  a.params_.assign(params.begin(), params.end());
  std::sort(a.params_.begin(), a.params_.end(), name_before);
  return a;
}

bool GradedAlgebra::in_support(int d) const {
  return d == 1 || (d >= q_ && d <= top_);
}

ParamPoly GradedAlgebra::bracket(int i, int j) const {
  if (i == j) return ParamPoly();
  if (i > j) return -bracket(j, i);
  if (!in_support(i) || !in_support(j)) return ParamPoly();
  const int t = i + j;
  if (t > top_ || !in_support(t)) return ParamPoly();
  if (i == 1) return ParamPoly::constant(1);
  auto it = constants_.find({i, j});
  return it == constants_.end() ? ParamPoly() : it->second;
}

GradedAlgebra GradedAlgebra::substituted(
    const std::map<std::string, ParamPoly>& bindings) const {
  Table t;
  for (const auto& [key, val] : constants_) t.emplace(key, val.substitute(bindings));
  return make(q_, top_, std::move(t));
}

bool GradedAlgebra::same_table(const GradedAlgebra& o) const {
  return q_ == o.q_ && top_ == o.top_ && constants_ == o.constants_;
}

GradedAlgebra build_m0q(int q, int n) {
  if (n <= q) throw std::domain_error("build_m0q: n must exceed q");
  return GradedAlgebra::make(q, n, {});
}

GradedAlgebra build_mq(int q, int n) {
  if (n < 2 * q + 1) throw std::domain_error("build_mq: n must be at least 2q+1");
  GradedAlgebra::Table t;
  for (int i = q + 1; q + i <= n; ++i) t[{q, i}] = ParamPoly::constant(1);
  return GradedAlgebra::make(q, n, std::move(t));
}

GradedAlgebra build_witt(int q, int n) {
  if (q < 2) throw std::domain_error("build_witt: q must be at least 2");
  if (n < q + 1) throw std::domain_error("build_witt: n too small");
  // c_q makes [y_q, y_{q+1}] = y_{2q+1} under y_i = c_q (i-2)! e_i.
  const Rational cq(factorial(2 * q - 1), factorial(q - 2) * factorial(q - 1));
  GradedAlgebra::Table t;
  for (int i = q; i < n; ++i)
    for (int j = i + 1; i + j <= n; ++j) {
      Rational lam = cq * Rational(factorial(i - 2) * factorial(j - 2) * (j - i),
                                   factorial(i + j - 2));
      t[{i, j}] = ParamPoly::constant(lam);
    }
  return GradedAlgebra::make(q, n, std::move(t));
}

GradedAlgebra build_extension_family(int q, int k, int s,
                                     const std::vector<ParamPoly>& betas) {
  if (q < 3) throw std::domain_error("build_extension_family: q must be at least 3");
  if (k < q) throw std::domain_error("build_extension_family: k must be at least q");
  if (s < 0) throw std::domain_error("build_extension_family: s must be nonnegative");
  const size_t expected = s >= 3 ? static_cast<size_t>((s + 1) / 2 - 1) : 0;
  if (betas.size() != expected)
    throw std::domain_error("build_extension_family: expected " +
                            std::to_string(expected) + " parameters, got " +
                            std::to_string(betas.size()));
  GradedAlgebra::Table t;
  for (int sigma = 1; sigma <= s; ++sigma) {
    const int level = 2 * k + sigma;
    for (int r = q; 2 * r < level; ++r) {
      const int sign = ((k - r) % 2 == 0) ? 1 : -1;
      ParamPoly val;
      if (sigma == 1) {
        val = ParamPoly::constant(sign);
      } else if (sigma == 2) {
        val = ParamPoly::constant(Rational(sign * (k + 1 - r)));
      } else {
        Rational lead(binomial(level - k - r - 1, k - r));
        val = ParamPoly::constant(lead);
        const int nparams = (sigma + 1) / 2 - 1;
        for (int i = 1; i <= nparams; ++i) {
          Rational c(binomial(level - k - r - 1 - i, k - r + i));
          if (c == 0) continue;
          if (i % 2 != 0) c = -c;
          val += betas[static_cast<size_t>(i - 1)].scaled(c);
        }
        val = val.scaled(Rational(sign));
      }
      if (!val.is_zero()) t[{r, level - r}] = val;
    }
  }
  return GradedAlgebra::make(q, 2 * k + s, std::move(t));
}

GradedAlgebra build_appendix_b(AppendixBName name, int k) {
  GradedAlgebra::Table t;
  auto rat = [](long n, long d = 1) { return ParamPoly::constant(Rational(Int(n), Int(d))); };
  switch (name) {
    case AppendixBName::m03: {
      if (k < 3) throw std::domain_error("m03 requires k >= 3");
      for (int l = 2; l <= k; ++l)
        t[{l, 2 * k + 1 - l}] = rat(l % 2 == 0 ? -1 : 1);
      for (int j = 2; j <= k; ++j)
        t[{j, 2 * k + 2 - j}] = rat((j % 2 == 0 ? -1 : 1) * (k - j + 1));
      for (int m = 3; m <= k + 1; ++m) {
        long v = static_cast<long>(m - 2) * k - static_cast<long>(m - 2) * (m - 1) / 2;
        t[{m, 2 * k + 3 - m}] = rat((m % 2 == 0 ? 1 : -1) * v);
      }
      return GradedAlgebra::make(2, 2 * k + 3, std::move(t));
    }
    case AppendixBName::m04_10: {
      t[{2, 5}] = rat(-1);
      t[{3, 4}] = rat(1);
      t[{2, 6}] = rat(-2);
      t[{3, 5}] = rat(1);
      t[{3, 6}] = rat(-2);
      t[{4, 5}] = rat(3);
      t[{4, 6}] = rat(3);
      t[{3, 7}] = rat(-5);
      t[{2, 8}] = rat(5);
      return GradedAlgebra::make(2, 10, std::move(t));
    }
    case AppendixBName::m05_11: {
      GradedAlgebra m04 = build_appendix_b(AppendixBName::m04_10);
      t = m04.constants();
      t[{3, 8}] = rat(5, 2);
      t[{2, 9}] = rat(5, 2);
      t[{4, 7}] = rat(-15, 2);
      t[{5, 6}] = rat(21, 2);
      return GradedAlgebra::make(2, 11, std::move(t));
    }
  }
  throw std::domain_error("unknown appendix B algebra");
}

std::vector<JacobiViolation> jacobi_check(const GradedAlgebra& a) {
  std::vector<JacobiViolation> out;
  const auto& sup = a.support();
  const size_t n = sup.size();
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y)
      for (size_t z = y + 1; z < n; ++z) {
        const int i = sup[x], j = sup[y], k = sup[z];
        const int sum = i + j + k;
        if (sum > a.top()) break;
        if (!a.in_support(sum)) continue;
        ParamPoly r = a.bracket(i, j) * a.bracket(i + j, k) +
                      a.bracket(j, k) * a.bracket(j + k, i) +
                      a.bracket(k, i) * a.bracket(k + i, j);
        if (!r.is_zero()) out.push_back({i, j, k, r});
      }
  return out;
}

std::vector<LeibnizViolation> verify_leibniz(const GradedAlgebra& a) {
  std::vector<LeibnizViolation> out;
  for (int i = a.q(); i <= a.top(); ++i)
    for (int j = i + 1; i + j + 1 <= a.top(); ++j) {
      ParamPoly r = a.bracket(i, j) - a.bracket(i + 1, j) - a.bracket(i, j + 1);
      if (!r.is_zero()) out.push_back({i, j, r});
    }
  return out;
}

IsoResult graded_iso(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!a.params().empty() || !b.params().empty())
    throw std::domain_error("graded_iso requires parameter-free algebras");
  if (a.q() != b.q() || a.top() != b.top())
    throw std::domain_error("graded_iso: mismatched q/top/support");

  // phi(e_i) = alpha_i e'_i with alpha_{i+1} = alpha_1 alpha_i forces, for
  // every pair i, j >= q, the single relation
  //   lambda_{i,j} alpha_1^q = lambda'_{i,j} alpha_q.
  // So all nonzero pairs must share the ratio lambda/lambda'.
  std::optional<Rational> ratio;
  std::pair<int, int> ratio_src{0, 0};
  const auto& sup = a.support();
  for (size_t x = 0; x < sup.size(); ++x)
    for (size_t y = x + 1; y < sup.size(); ++y) {
      const int i = sup[x], j = sup[y];
      if (i < a.q()) continue;
      if (i + j > a.top()) break;
      Rational la = a.bracket(i, j).constant_value();
      Rational lb = b.bracket(i, j).constant_value();
      if (la == 0 && lb == 0) continue;
      if (la == 0 || lb == 0) {
        std::ostringstream os;
        os << "bracket (" << i << "," << j << ") vanishes on one side only";
        return NotIsomorphic{os.str()};
      }
      Rational c = la / lb;
      if (!ratio) {
        ratio = c;
        ratio_src = {i, j};
      } else if (*ratio != c) {
        std::ostringstream os;
        os << "inconsistent scaling: pair (" << ratio_src.first << ","
           << ratio_src.second << ") needs alpha_q/alpha_1^q = " << rat_str(*ratio)
           << " but (" << i << "," << j << ") needs " << rat_str(c);
        return NotIsomorphic{os.str()};
      }
    }
  return IsoWitness{Rational(1), ratio.value_or(Rational(1))};
}

std::string emit_algebra(const GradedAlgebra& a) {
  std::ostringstream os;
  os << "q=" << a.q() << "\n";
  os << "top=" << a.top() << "\n";
  os << "support=";
  for (size_t i = 0; i < a.support().size(); ++i) {
    if (i) os << ",";
    os << a.support()[i];
  }
  os << "\n";
  os << "params=";
  for (size_t i = 0; i < a.params().size(); ++i) {
    if (i) os << ",";
    os << a.params()[i];
  }
  os << "\n";
  for (const auto& [key, val] : a.constants())
    os << "lambda " << key.first << " " << key.second << " = " << val.str() << "\n";
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int_field(const std::string& s, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw AlgebraParseError(line, "expected integer, got '" + s + "'");
  }
}

}  // namespace

GradedAlgebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int q = -1, top = -1;
  std::vector<int> support;
  bool have_support = false, have_params = false;
  GradedAlgebra::Table table;

  auto expect_prefix = [&](const std::string& l, const std::string& p) {
    if (l.rfind(p, 0) != 0)
      throw AlgebraParseError(lineno, "expected '" + p + "...', got '" + l + "'");
    return l.substr(p.size());
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string l = trim(line);
    if (l.empty() || l[0] == '#') continue;
    if (q < 0) {
      q = parse_int_field(expect_prefix(l, "q="), lineno);
    } else if (top < 0) {
      top = parse_int_field(expect_prefix(l, "top="), lineno);
    } else if (!have_support) {
      std::string body = expect_prefix(l, "support=");
      std::istringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) support.push_back(parse_int_field(trim(item), lineno));
      have_support = true;
    } else if (!have_params) {
      expect_prefix(l, "params=");
      have_params = true;  // parameter names are recomputed from the table
    } else {
      std::string body = expect_prefix(l, "lambda ");
      std::istringstream ss(body);
      int i = 0, j = 0;
      std::string eq;
      if (!(ss >> i >> j >> eq) || eq != "=")
        throw AlgebraParseError(lineno, "expected 'lambda <i> <j> = <poly>'");
      std::string poly;
      std::getline(ss, poly);
      try {
        table[{i, j}] = ParamPoly::parse(trim(poly));
      } catch (const std::exception& e) {
        throw AlgebraParseError(lineno, e.what());
      }
    }
  }
  if (q < 0 || top < 0 || !have_support || !have_params)
    throw AlgebraParseError(lineno, "incomplete header");
  GradedAlgebra a;
  try {
    a = GradedAlgebra::make(q, top, std::move(table));
  } catch (const std::exception& e) {
    throw AlgebraParseError(lineno, e.what());
  }
  if (support != a.support()) throw AlgebraParseError(lineno, "support list does not match q/top");
  return a;
}

}  // namespace maxclass
