#include "maxclass/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxclass {

std::vector<Rational> univariate_coeffs(const ParamPoly& p, std::string* var_out) {
  std::vector<std::string> used = p.used_vars();
  if (used.size() > 1)
    throw std::domain_error("polynomial is not univariate: " + p.str());
  std::string var = used.empty() ? std::string() : used[0];
  if (var_out) *var_out = var;
  long deg = used.empty() ? 0 : p.degree_in(var);
  std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1, Rational(0));
  ParamPoly q = p.pruned();
  for (const auto& [m, c] : q.terms()) {
    unsigned e = m.empty() ? 0u : m[0];
    coeffs[e] = c;
  }
  return coeffs;
}

ParamPoly from_univariate_coeffs(const std::vector<Rational>& coeffs,
                                 const std::string& var) {
  ParamPoly x = ParamPoly::variable(var);
  ParamPoly out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    out = out + x.pow(static_cast<unsigned>(i)).scaled(coeffs[i]);
  }
  return out;
}

namespace {

// remainder of a mod b over Q, dense coefficients, b nonzero
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  const size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Rational factor = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i <= db; ++i) a[i + shift] -= factor * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

std::vector<Rational> trimmed(std::vector<Rational> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of zeros undefined");
  std::string va, vb;
  std::vector<Rational> ca = univariate_coeffs(a, &va);
  std::vector<Rational> cb = univariate_coeffs(b, &vb);
  if (!va.empty() && !vb.empty() && va != vb)
    throw std::domain_error("gcd inputs in different parameters: " + va + " vs " + vb);
  std::string var = va.empty() ? vb : va;

  std::vector<Rational> u = trimmed(ca), v = trimmed(cb);
  while (!v.empty()) {
    std::vector<Rational> r = poly_rem(u, v);
    u = v;
    v = r;
  }
  // monic normalization
  Rational lead = u.back();
  for (auto& c : u) c /= lead;
  if (u.size() == 1) return ParamPoly::constant(u[0]);
  return from_univariate_coeffs(u, var);
}

std::vector<Rational> rational_roots(const ParamPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
  std::string var;
  std::vector<Rational> coeffs = trimmed(univariate_coeffs(p, &var));
  std::vector<Rational> roots;
  if (coeffs.size() == 1) return roots;  // nonzero constant

  // factor out x^k
  size_t k = 0;
  while (coeffs[k] == 0) ++k;
  if (k > 0) {
    roots.push_back(Rational(0));
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(k));
  }
  if (coeffs.size() == 1) return roots;

  // clear denominators and remove integer content
  Int dlcm = 1;
  for (const auto& c : coeffs) dlcm = boost::multiprecision::lcm(dlcm, den(c));
  std::vector<Int> ic;
  ic.reserve(coeffs.size());
  Int g = 0;
  for (const auto& c : coeffs) {
    Int v = num(c) * (dlcm / den(c));
    ic.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  for (auto& v : ic) v /= g;

  const Int trailing = ic.front();
  const Int leading = ic.back();
  auto value_at = [&ic](const Rational& x) {
    Rational acc = 0;
    for (auto it = ic.rbegin(); it != ic.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };
  for (const Int& pn : positive_divisors(trailing)) {
    for (const Int& qd : positive_divisors(leading)) {
      if (boost::multiprecision::gcd(pn, qd) != 1) continue;
      Rational cand(pn, qd);
      if (value_at(cand) == 0) roots.push_back(cand);
      if (value_at(-cand) == 0) roots.push_back(-cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

ParamPoly deflate_root(const ParamPoly& p, const std::string& var, const Rational& root) {
  ParamPoly lin = ParamPoly::variable(var) - ParamPoly::constant(root);
  auto q = p.divide_exact(lin);
  if (!q) throw std::domain_error("deflate_root: " + rat_str(root) + " is not a root");
  return *q;
}

}  // namespace maxclass
