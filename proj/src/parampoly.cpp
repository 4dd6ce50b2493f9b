#include "maxclass/parampoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace maxclass {

bool name_before(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool ParamPoly::MonoBefore::operator()(const Mono& a, const Mono& b) const {
  unsigned long da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ParamPoly ParamPoly::constant(const Rational& c) {
  ParamPoly p;
  if (c != 0) p.terms_.emplace(Mono{}, c);
  return p;
}

ParamPoly ParamPoly::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  ParamPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Mono{1}, Rational(1));
  return p;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Mono& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

Rational ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

bool ParamPoly::uses(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return false;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  for (const auto& [m, c] : terms_)
    if (m[idx] != 0) return true;
  return false;
}

std::vector<std::string> ParamPoly::used_vars() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [m, c] : terms_) {
      if (m[i] != 0) {
        out.push_back(vars_[i]);
        break;
      }
    }
  }
  return out;
}

long ParamPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Mono& m = terms_.begin()->first;  // leading term has maximal degree
  long d = 0;
  for (unsigned e : m) d += e;
  return d;
}

long ParamPoly::degree_in(const std::string& var) const {
  if (terms_.empty()) return -1;
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[idx]));
  return d;
}

void ParamPoly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

// Positions of each of `from`'s variables inside `to` (which must contain them).
std::vector<size_t> index_map(const std::vector<std::string>& from,
                              const std::vector<std::string>& to) {
  std::vector<size_t> map(from.size());
  for (size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    map[i] = static_cast<size_t>(it - to.begin());
  }
  return map;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end(), name_before);
  return out;
}

ParamPoly::Mono remap(const ParamPoly::Mono& m, const std::vector<size_t>& map,
                      size_t width) {
  ParamPoly::Mono out(width, 0);
  for (size_t i = 0; i < m.size(); ++i) out[map[i]] = m[i];
  return out;
}

}  // namespace

ParamPoly ParamPoly::aligned_combine(const ParamPoly& a, const ParamPoly& b,
                                     bool subtract) {
  ParamPoly out;
  out.vars_ = merge_vars(a.vars_, b.vars_);
  auto ma = index_map(a.vars_, out.vars_);
  auto mb = index_map(b.vars_, out.vars_);
  for (const auto& [m, c] : a.terms_) out.add_term(remap(m, ma, out.vars_.size()), c);
  for (const auto& [m, c] : b.terms_)
    out.add_term(remap(m, mb, out.vars_.size()), subtract ? Rational(-c) : c);
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  return aligned_combine(*this, o, false);
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  return aligned_combine(*this, o, true);
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly out;
  if (terms_.empty() || o.terms_.empty()) return out;
  out.vars_ = merge_vars(vars_, o.vars_);
  auto ma = index_map(vars_, out.vars_);
  auto mb = index_map(o.vars_, out.vars_);
  const size_t w = out.vars_.size();
  for (const auto& [m1, c1] : terms_) {
    Mono r1 = remap(m1, ma, w);
    for (const auto& [m2, c2] : o.terms_) {
      Mono m = r1;
      for (size_t i = 0; i < m2.size(); ++i) m[mb[i]] += m2[i];
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) { return *this = *this + o; }
ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this = *this - o; }
ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly out;
  if (c == 0) return out;
  out.vars_ = vars_;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool ParamPoly::operator==(const ParamPoly& o) const { return compare(*this, o) == 0; }

int ParamPoly::compare(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly d = a - b;
  if (d.terms_.empty()) return 0;
  return d.terms_.begin()->second > 0 ? 1 : -1;
}

ParamPoly ParamPoly::coeff_of(const std::string& var, unsigned e) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return e == 0 ? *this : ParamPoly();
  size_t idx = static_cast<size_t>(it - vars_.begin());
  ParamPoly out;
  out.vars_ = vars_;
  for (const auto& [m, c] : terms_) {
    if (m[idx] != e) continue;
    Mono nm = m;
    nm[idx] = 0;
    out.add_term(nm, c);
  }
  return out.pruned();
}

ParamPoly ParamPoly::substitute(const std::map<std::string, ParamPoly>& bindings) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    ParamPoly term = constant(c);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = bindings.find(vars_[i]);
      ParamPoly base = (it == bindings.end()) ? variable(vars_[i]) : it->second;
      term = term * base.pow(m[i]);
    }
    out = out + term;
  }
  return out;
}

Rational ParamPoly::eval(const std::map<std::string, Rational>& point) const {
  Rational out = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw std::domain_error("unbound variable in evaluation: " + vars_[i]);
      term *= rat_pow(it->second, m[i]);
    }
    out += term;
  }
  return out;
}

ParamPoly ParamPoly::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  ParamPoly out;
  if (it == vars_.end()) return out;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  out.vars_ = vars_;
  for (const auto& [m, c] : terms_) {
    if (m[idx] == 0) continue;
    Mono d = m;
    d[idx] -= 1;
    out.add_term(d, c * Rational(m[idx]));
  }
  return out;
}

Rational ParamPoly::content() const {
  Int g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    g = boost::multiprecision::gcd(g, num(c));
    l = boost::multiprecision::lcm(l, den(c));
  }
  if (g == 0) return Rational(0);
  return Rational(g, l);
}

ParamPoly ParamPoly::primitive_part() const {
  if (terms_.empty()) return ParamPoly();
  Rational c = content();
  if (terms_.begin()->second < 0) c = -c;
  return scaled(Rational(1) / c);
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::vector<std::string> allvars = merge_vars(vars_, divisor.vars_);
  ParamPoly rem = with_vars(allvars);
  ParamPoly d = divisor.with_vars(allvars);
  ParamPoly quot;
  const auto& [lm_d, lc_d] = *d.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [lm_r, lc_r] = *rem.terms_.begin();
    Mono q(lm_r.size());
    for (size_t i = 0; i < lm_r.size(); ++i) {
      if (lm_r[i] < lm_d[i]) return std::nullopt;
      q[i] = lm_r[i] - lm_d[i];
    }
    ParamPoly qt;
    qt.vars_ = allvars;
    qt.terms_.emplace(q, lc_r / lc_d);
    quot = quot + qt;
    rem = rem - qt * d;
  }
  return quot.pruned();
}

std::optional<Rational> ParamPoly::proportional(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const std::vector<std::string> allvars = merge_vars(a.vars_, b.vars_);
  ParamPoly aa = a.with_vars(allvars);
  ParamPoly bb = b.with_vars(allvars);
  if (aa.terms_.size() != bb.terms_.size()) return std::nullopt;
  Rational c = aa.terms_.begin()->second / bb.terms_.begin()->second;
  auto ia = aa.terms_.begin();
  auto ib = bb.terms_.begin();
  for (; ia != aa.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second * c) return std::nullopt;
  }
  return c;
}

ParamPoly ParamPoly::with_vars(const std::vector<std::string>& vars) const {
  ParamPoly out;
  out.vars_ = vars;
  auto map = index_map(vars_, vars);
  for (const auto& [m, c] : terms_) out.terms_.emplace(remap(m, map, vars.size()), c);
  return out;
}

ParamPoly ParamPoly::pruned() const {
  std::vector<std::string> keep = used_vars();
  if (keep.size() == vars_.size()) return *this;
  ParamPoly out;
  out.vars_ = keep;
  auto map = index_map(keep, vars_);
  for (const auto& [m, c] : terms_) {
    Mono nm(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) nm[i] = m[map[i]];
    out.terms_.emplace(nm, c);
  }
  return out;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (unsigned e : m) has_var = has_var || e > 0;
    bool coeff_shown = !has_var || ac != 1;
    if (coeff_shown) os << rat_str(ac);
    bool star = coeff_shown;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      if (star) os << "*";
      os << vars_[i];
      if (m[i] > 1) os << "^" << m[i];
      star = true;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " +
                                std::to_string(pos) + ": " + what + " in '" + s + "'");
  }

  Int parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }

  std::string parse_name() {
    skip_ws();
    size_t start = pos;
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      fail("expected variable name");
    ++pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos < s.size() && s[pos] == '[') {
      while (pos < s.size() && s[pos] != ']') ++pos;
      if (pos >= s.size()) fail("unterminated '[' in variable name");
      ++pos;
    }
    return s.substr(start, pos - start);
  }

  // factor := integer[/integer] | name[^exp]
  void parse_factor(Rational& coeff, std::map<std::string, unsigned>& exps) {
    skip_ws();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      Int n = parse_int();
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        Int d = parse_int();
        if (d == 0) fail("zero denominator");
        coeff *= Rational(n, d);
      } else {
        coeff *= Rational(n);
      }
      return;
    }
    std::string name = parse_name();
    unsigned e = 1;
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      Int ei = parse_int();
      if (ei < 0 || ei > 100000) fail("exponent out of range");
      e = static_cast<unsigned>(ei);
    }
    exps[name] += e;
  }

  ParamPoly parse_poly() {
    ParamPoly out;
    bool first = true;
    while (!eof()) {
      int sign = 1;
      skip_ws();
      if (s[pos] == '+' || s[pos] == '-') {
        sign = (s[pos] == '-') ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      Rational coeff(sign);
      std::map<std::string, unsigned> exps;
      parse_factor(coeff, exps);
      skip_ws();
      while (pos < s.size() && s[pos] == '*') {
        ++pos;
        parse_factor(coeff, exps);
        skip_ws();
      }
      ParamPoly term = ParamPoly::constant(coeff);
      for (const auto& [name, e] : exps)
        term = term * ParamPoly::variable(name).pow(e);
      out = out + term;
      first = false;
    }
    return out;
  }
};

}  // namespace

ParamPoly ParamPoly::parse(const std::string& text) {
  Parser p(text);
  if (p.eof()) throw std::invalid_argument("empty polynomial text");
  return p.parse_poly();
}

}  // namespace maxclass
