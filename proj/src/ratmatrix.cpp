#include "maxclass/ratmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace maxclass {

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = ParamPoly::constant(1);
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::domain_error("matrix product dimension mismatch");
  RatMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < o.cols_; ++j) {
      ParamPoly acc;
      for (size_t k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << "  ";
      os << at(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

ParamPoly det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("det of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return ParamPoly::constant(1);
  RatMatrix a = m;
  int sign = 1;
  ParamPoly prev = ParamPoly::constant(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    // pivot: prefer a parameter-free nonzero entry in column k
    size_t piv = n;
    for (size_t i = k; i < n; ++i)
      if (!a.at(i, k).is_zero() && a.at(i, k).is_constant()) {
        piv = i;
        break;
      }
    if (piv == n)
      for (size_t i = k; i < n; ++i)
        if (!a.at(i, k).is_zero()) {
          piv = i;
          break;
        }
    if (piv == n) return ParamPoly();  // zero column, singular
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        ParamPoly v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        auto q = v.divide_exact(prev);
        if (!q) throw std::logic_error("bareiss divisibility failed");
        a.at(i, j) = *q;
      }
      a.at(i, k) = ParamPoly();
    }
    prev = a.at(k, k);
  }
  ParamPoly d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

size_t rank_constant(const RatMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).constant_value();
  size_t rank = 0;
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t piv = a.size();
    for (size_t i = rank; i < a.size(); ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    for (size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

struct Row {
  std::vector<ParamPoly> c;
  ParamPoly rhs;

  bool all_zero_coeffs() const {
    for (const auto& p : c)
      if (!p.is_zero()) return false;
    return true;
  }

  // divide the whole row by its rational content, first nonzero entry positive
  void normalize() {
    Rational g = 0;
    Int gn = 0, dl = 1;
    auto fold = [&](const ParamPoly& p) {
      for (const auto& [mono, coef] : p.terms()) {
        gn = boost::multiprecision::gcd(gn, num(coef));
        dl = boost::multiprecision::lcm(dl, den(coef));
      }
    };
    for (const auto& p : c) fold(p);
    fold(rhs);
    if (gn == 0) return;
    g = Rational(gn, dl);
    int sgn = 0;
    for (const auto& p : c) {
      if (!p.is_zero()) {
        sgn = p.terms().begin()->second > 0 ? 1 : -1;
        break;
      }
    }
    if (sgn == 0) sgn = rhs.terms().begin()->second > 0 ? 1 : -1;
    Rational inv = Rational(sgn) / g;
    for (auto& p : c) p = p.scaled(inv);
    rhs = rhs.scaled(inv);
  }
};

}  // namespace

SolveResult solve_linear(const RatMatrix& m, const std::vector<ParamPoly>& rhs,
                         const SolveOptions& opt) {
  if (m.rows() != rhs.size())
    throw std::domain_error("solve_linear dimension mismatch");
  const size_t nrows = m.rows(), ncols = m.cols();
  std::vector<Row> rows(nrows);
  for (size_t i = 0; i < nrows; ++i) {
    rows[i].c.resize(ncols);
    for (size_t j = 0; j < ncols; ++j) rows[i].c[j] = m.at(i, j);
    rows[i].rhs = rhs[i];
  }

  SolveResult res;
  std::vector<bool> used(nrows, false);
  std::vector<std::pair<size_t, size_t>> pivots;  // (col, row)

  for (size_t col = 0; col < ncols; ++col) {
    size_t piv = nrows;
    for (size_t i = 0; i < nrows; ++i)
      if (!used[i] && !rows[i].c[col].is_zero() && rows[i].c[col].is_constant()) {
        piv = i;
        break;
      }
    if (piv == nrows && !opt.constant_pivots_only) {
      for (size_t i = 0; i < nrows; ++i)
        if (!used[i] && !rows[i].c[col].is_zero()) {
          piv = i;
          break;
        }
      if (piv != nrows)
        res.genericity.push_back(rows[piv].c[col].primitive_part());
    }
    if (piv == nrows) continue;  // free column
    used[piv] = true;
    pivots.emplace_back(col, piv);
    const ParamPoly pv = rows[piv].c[col];
    for (size_t i = 0; i < nrows; ++i) {
      if (used[i] || rows[i].c[col].is_zero()) continue;
      const ParamPoly f = rows[i].c[col];
      for (size_t j = 0; j < ncols; ++j)
        rows[i].c[j] = rows[i].c[j] * pv - rows[piv].c[j] * f;
      rows[i].rhs = rows[i].rhs * pv - rows[piv].rhs * f;
      rows[i].normalize();
    }
  }

  std::vector<bool> is_pivot_col(ncols, false);
  for (auto [col, row] : pivots) is_pivot_col[col] = true;
  std::vector<std::string> free_names(ncols);
  size_t auto_id = 0;
  for (size_t col = 0; col < ncols; ++col) {
    if (is_pivot_col[col]) continue;
    res.free_cols.push_back(col);
    std::string name = (col < opt.free_names.size() && !opt.free_names[col].empty())
                           ? opt.free_names[col]
                           : "t" + std::to_string(++auto_id);
    free_names[col] = name;
    res.free_var_names.push_back(name);
  }

  // leftover rows: linear relations among the free variables (or pure
  // residuals), reported as the raw amount by which the equation fails
  for (size_t i = 0; i < nrows; ++i) {
    if (used[i]) continue;
    ParamPoly lhs;
    for (size_t col : res.free_cols)
      lhs += rows[i].c[col] * ParamPoly::variable(free_names[col]);
    ParamPoly resid = rows[i].rhs - lhs;
    if (!resid.is_zero()) {
      res.constraints.push_back(resid);
      res.constraint_rows.push_back(i);
    }
  }

  // back-substitution, latest pivot first
  res.solution.assign(ncols, ParamPoly());
  for (size_t col : res.free_cols)
    res.solution[col] = ParamPoly::variable(free_names[col]);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [col, row] = *it;
    ParamPoly acc = rows[row].rhs;
    for (size_t j = 0; j < ncols; ++j) {
      if (j == col || rows[row].c[j].is_zero()) continue;
      acc -= rows[row].c[j] * res.solution[j];
    }
    const ParamPoly& pv = rows[row].c[col];
    if (pv.is_constant()) {
      res.solution[col] = acc.scaled(Rational(1) / pv.constant_value());
    } else {
      auto q = acc.divide_exact(pv);
      if (!q)
        throw std::domain_error(
            "solve_linear: solution is not polynomial under parametric pivot " +
            pv.str());
      res.solution[col] = *q;
    }
  }

  if (!res.constraints.empty())
    res.kind = SolveResult::Kind::Inconsistent;
  else if (!res.free_cols.empty())
    res.kind = SolveResult::Kind::FreeVariables;
  else
    res.kind = SolveResult::Kind::Unique;
  return res;
}

}  // namespace maxclass
