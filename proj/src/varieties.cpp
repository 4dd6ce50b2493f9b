#include "maxclass/varieties.hpp"

#include <algorithm>
#include <sstream>

namespace maxclass {

std::string VarietyVar::name() const {
  if (xminus1) return "xm1";
  std::ostringstream os;
  os << "x[" << j << "," << s << "]";
  return os.str();
}

std::optional<VarietyVar> VarietyVar::try_parse(const std::string& name) {
  if (name == "xm1") return xm1();
  int j = 0, s = 0;
  char a = 0, b = 0, c = 0, d = 0;
  std::istringstream is(name);
  if ((is >> a >> b >> j >> c >> s >> d) && a == 'x' && b == '[' && c == ',' &&
      d == ']' && is.peek() == EOF)
    return x(j, s);
  return std::nullopt;
}

bool VarietyVar::operator<(const VarietyVar& o) const {
  // xm1 first, then (j, s) ascending
  if (xminus1 != o.xminus1) return xminus1;
  if (j != o.j) return j < o.j;
  return s < o.s;
}

namespace {

ParamPoly xvar(int j, int s) { return ParamPoly::variable(VarietyVar::x(j, s).name()); }

void check_jqr(int j, int q, int r, int rmin) {
  if (!(2 <= j && j < q)) throw std::domain_error("need 2 <= j < q");
  if (r < rmin) throw std::domain_error("weight index out of range");
}

bool var_name_before(const std::string& a, const std::string& b) {
  auto va = VarietyVar::try_parse(a);
  auto vb = VarietyVar::try_parse(b);
  if (va && vb) return *va < *vb;
  if (va != std::nullopt || vb != std::nullopt) return va != std::nullopt;
  return name_before(a, b);
}

std::vector<std::string> occurring_vars(const std::vector<LabeledPoly>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys)
    for (const auto& name : p.poly.used_vars())
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  std::sort(out.begin(), out.end(), var_name_before);
  return out;
}

void sort_system(PolySystem& sys) {
  std::stable_sort(sys.polys.begin(), sys.polys.end(),
                   [](const LabeledPoly& a, const LabeledPoly& b) {
                     if (a.j != b.j) return a.j < b.j;
                     if (a.q != b.q) return a.q < b.q;
                     return a.r < b.r;
                   });
  sys.vars = occurring_vars(sys.polys);
}

}  // namespace

ParamPoly gen_F(int j, int q, int r) {
  check_jqr(j, q, r, 0);
  ParamPoly F;
  for (int t = 0; t <= r; ++t) {
    for (int l = j; l <= (j + q - 1) / 2; ++l)
      for (int m = q + 1; m <= q + (j + t) / 2; ++m) {
        Int c = binomial(q - l - 1, l - j) * binomial(j + q - m + t - 1, m - q - 1);
        if (c == 0) continue;
        if ((l - j + m - q) % 2 != 0) c = -c;
        F += (xvar(l, t) * xvar(m, r - t)).scaled(Rational(c));
      }
    for (int l = j; l <= (j + q) / 2; ++l)
      for (int m = q; m <= q + (j + t) / 2; ++m) {
        Int c = binomial(q - l, l - j) * binomial(j + q - m + t, m - q);
        if (c == 0) continue;
        if ((l - j + m - q) % 2 != 0) c = -c;
        F += (xvar(l, t) * xvar(m, r - t)).scaled(Rational(c));
      }
    for (int m = j; m <= q + (j + t) / 2; ++m) {
      Int c = binomial(2 * q - m + t, m - j);
      if (c == 0) continue;
      if ((m - j + 1) % 2 != 0) c = -c;
      F += (xvar(q, t) * xvar(m, r - t)).scaled(Rational(c));
    }
  }
  return F;
}

ParamPoly gen_G(int j, int q, int r) {
  check_jqr(j, q, r, -1);
  ParamPoly G;
  for (int l = j; l <= (j + q - 1) / 2; ++l) {
    Int c = binomial(q - l - 1, l - j);
    if (l % 2 != 0) c = -c;
    if (c != 0) G += xvar(l, r + 1).scaled(Rational(c));
  }
  for (int l = j; l <= (j + q) / 2; ++l) {
    Int c = binomial(q - l, l - j);
    if (l % 2 != 0) c = -c;
    if (c != 0) G += xvar(l, r + 1).scaled(Rational(c));
  }
  G -= xvar(q, r + 1).scaled(Rational(q % 2 == 0 ? 1 : -1));
  return G;
}

PolySystem assemble_system(int n) {
  if (n < 9) throw std::domain_error("assemble_system requires n >= 9");
  PolySystem sys;
  sys.n = n;
  auto label = [](const char* fam, int j, int q, int r) {
    std::ostringstream os;
    os << fam << "(" << j << "," << q << "," << r << ")";
    return os.str();
  };
  for (int j = 2; j + 2 * (j + 1) <= n; ++j) {
    for (int q = j + 1; j + 2 * q <= n; ++q) {
      if (n % 2 != 0) {
        for (int r = 0; j + 2 * q + r + 1 <= n; ++r)
          sys.polys.push_back({label("F", j, q, r), j, q, r, gen_F(j, q, r)});
      } else {
        for (int r = 0; j + 2 * q + r + 1 < n; ++r)
          sys.polys.push_back({label("F", j, q, r), j, q, r, gen_F(j, q, r)});
        if (j + 2 * q < n) {  // j + 2q + 1 + r = n with r >= 0
          int r = n - j - 2 * q - 1;
          int sign = ((n / 2 - j - q) % 2 == 0) ? 1 : -1;
          ParamPoly p = gen_F(j, q, r) +
                        (ParamPoly::variable("xm1") * gen_G(j, q, r)).scaled(Rational(sign));
          sys.polys.push_back({label("F+xG", j, q, r), j, q, r, p});
        } else {  // j + 2q == n
          ParamPoly p = ParamPoly::variable("xm1") * gen_G(j, q, -1);
          sys.polys.push_back({label("xG", j, q, -1), j, q, -1, p});
        }
      }
    }
  }
  sort_system(sys);
  return sys;
}

PolySystem change_coords(const PolySystem& sys,
                         const std::vector<std::pair<std::string, ParamPoly>>& defs) {
  // invert the linear map: old variables in terms of the new ones
  std::vector<std::string> old_names;
  for (const auto& [nm, rhs] : defs)
    for (const auto& v : rhs.used_vars())
      if (std::find(old_names.begin(), old_names.end(), v) == old_names.end())
        old_names.push_back(v);
  std::sort(old_names.begin(), old_names.end(), var_name_before);

  RatMatrix m(defs.size(), old_names.size());
  std::vector<ParamPoly> rhs(defs.size());
  for (size_t i = 0; i < defs.size(); ++i) {
    const ParamPoly& lin = defs[i].second;
    if (lin.total_degree() > 1)
      throw std::domain_error("change_coords definitions must be linear");
    for (size_t jv = 0; jv < old_names.size(); ++jv)
      m.at(i, jv) = lin.derivative(old_names[jv]);
    rhs[i] = ParamPoly::variable(defs[i].first);
  }
  SolveResult sol = solve_linear(m, rhs);
  if (sol.kind != SolveResult::Kind::Unique)
    throw std::domain_error(
        "change_coords map is not invertible on the occurring variables");

  std::map<std::string, ParamPoly> subst;
  for (size_t jv = 0; jv < old_names.size(); ++jv) subst[old_names[jv]] = sol.solution[jv];

  PolySystem out;
  out.n = sys.n;
  for (const auto& p : sys.polys) {
    for (const auto& v : p.poly.used_vars())
      if (!subst.count(v) && v != "xm1")
        throw std::domain_error("change_coords does not cover variable " + v);
    out.polys.push_back({p.label, p.j, p.q, p.r, p.poly.substitute(subst)});
  }
  // variable list in declaration order, xm1 first when it occurs
  std::set<std::string> names;
  for (const auto& p : out.polys)
    for (const auto& v : p.poly.used_vars()) names.insert(v);
  if (names.count("xm1")) out.vars.push_back("xm1");
  for (const auto& [nm, unused] : defs)
    if (names.count(nm)) out.vars.push_back(nm);
  return out;
}

PolySystem restrict_vars(const PolySystem& sys, const std::set<std::string>& zeroed) {
  std::map<std::string, ParamPoly> subst;
  for (const auto& v : zeroed) subst[v] = ParamPoly();
  PolySystem out;
  out.n = sys.n;
  for (const auto& p : sys.polys) {
    ParamPoly q = p.poly.substitute(subst);
    if (!q.is_zero()) out.polys.push_back({p.label, p.j, p.q, p.r, q});
  }
  sort_system(out);
  return out;
}

PolySystem restrict_weights(const PolySystem& sys, const std::set<int>& weights) {
  std::set<std::string> zeroed;
  for (const auto& v : sys.vars) {
    auto parsed = VarietyVar::try_parse(v);
    if (parsed && weights.count(parsed->weight())) zeroed.insert(v);
  }
  return restrict_vars(sys, zeroed);
}

PolySystem eliminate_var(const PolySystem& sys, const std::string& var,
                         const ParamPoly& rhs) {
  std::map<std::string, ParamPoly> subst{{var, rhs}};
  PolySystem out;
  out.n = sys.n;
  for (const auto& p : sys.polys) {
    ParamPoly q = p.poly.substitute(subst);
    if (!q.is_zero()) out.polys.push_back({p.label, p.j, p.q, p.r, q});
  }
  // preserve declared variable order minus the eliminated one
  for (const auto& v : sys.vars)
    if (v != var) out.vars.push_back(v);
  return out;
}

RatMatrix jacobian(const PolySystem& sys) {
  RatMatrix m(sys.polys.size(), sys.vars.size());
  for (size_t i = 0; i < sys.polys.size(); ++i)
    for (size_t jv = 0; jv < sys.vars.size(); ++jv)
      m.at(i, jv) = sys.polys[i].poly.derivative(sys.vars[jv]);
  return m;
}

std::vector<Rational> eval_point(const PolySystem& sys,
                                 const std::map<std::string, Rational>& point) {
  std::vector<Rational> out;
  out.reserve(sys.polys.size());
  for (const auto& p : sys.polys) out.push_back(p.poly.eval(point));
  return out;
}

std::string emit_system(const PolySystem& sys) {
  std::ostringstream os;
  for (const auto& p : sys.polys) os << p.label << ": " << p.poly.str() << "\n";
  return os.str();
}

}  // namespace maxclass
