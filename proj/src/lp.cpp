/*
Copyright 2026 The qnc Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "qnc/lp.hpp"

#include <sstream>

#include "qnc/error.hpp"
#include "region.hpp"

namespace qnc {

namespace {

// Column z_col of the standard form contributes sign * z to original variable.
struct Term {
  std::size_t col;
  int sign;
};

struct VariableMap {
  Rational offset = 0;
  std::vector<Term> terms;
};

// Dense tableau for  max c.z  s.t.  T z = rhs, z >= 0, rhs >= 0.
class Tableau {
 public:
  Tableau(Matrix rows, Vec rhs, std::size_t cols) : a_(std::move(rows)), rhs_(std::move(rhs)), cols_(cols) {}

  std::size_t rows() const { return a_.size(); }
  std::vector<std::size_t>& basis() { return basis_; }

  // Returns false when the objective is unbounded above.
  bool maximize(const Vec& c) {
    // reduced costs r_j = c_j - c_B . A_j
    Vec reduced = c;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(a_[i][j]) != 0) reduced[j] -= cb * a_[i][j];
    }
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(reduced[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == cols_) return true;

      std::size_t leave = a_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        Rational ratio = rhs_[i] / a_[i][enter];
        if (leave == a_.size() || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter, &reduced);
    }
  }

  void pivot(std::size_t r, std::size_t c, Vec* reduced) {
    const Rational inv = 1 / a_[r][c];
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(a_[r][j]) != 0) a_[r][j] *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (reduced && sgn((*reduced)[c]) != 0) {
      const Rational f = (*reduced)[c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(a_[r][j]) != 0) (*reduced)[j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  const Vec& row(std::size_t i) const { return a_[i]; }
  const Rational& rhs(std::size_t i) const { return rhs_[i]; }

  void erase_row(std::size_t i) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  void truncate_columns(std::size_t cols) {
    for (auto& row : a_) row.resize(cols);
    cols_ = cols;
  }

  Vec solution() const {
    Vec z = zeros(cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) z[basis_[i]] = rhs_[i];
    return z;
  }

 private:
  Matrix a_;
  Vec rhs_;
  std::size_t cols_;
  std::vector<std::size_t> basis_;
};

void check_shape(const LPProblem& p) {
  const std::size_t n = p.num_vars();
  for (const auto& c : p.constraints)
    if (c.coeffs.size() != n) {
      std::ostringstream os;
      os << "LP constraint has " << c.coeffs.size() << " coefficients for " << n << " variables";
      fail(ErrorKind::Malformed, os.str());
    }
  if (!p.lower.empty() && p.lower.size() != n) fail(ErrorKind::Malformed, "LP lower bounds: wrong length");
  if (!p.upper.empty() && p.upper.size() != n) fail(ErrorKind::Malformed, "LP upper bounds: wrong length");
}

}  // namespace

LPResult solve(const LPProblem& problem) {
  check_shape(problem);
  const std::size_t n = problem.num_vars();

  // 1. substitute bounded / free variables by nonnegative columns
  std::vector<VariableMap> vars(n);
  std::size_t cols = 0;
  struct UpperRow {
    std::size_t col;
    Rational bound;
  };
  std::vector<UpperRow> upper_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const auto lo = problem.lower.empty() ? std::nullopt : problem.lower[j];
    const auto hi = problem.upper.empty() ? std::nullopt : problem.upper[j];
    if (lo && hi && *hi < *lo) return {LPStatus::Infeasible, 0, {}};
    if (lo) {
      vars[j].offset = *lo;
      vars[j].terms.push_back({cols, +1});
      if (hi) upper_rows.push_back({cols, *hi - *lo});
      ++cols;
    } else if (hi) {
      vars[j].offset = *hi;
      vars[j].terms.push_back({cols++, -1});
    } else {
      vars[j].terms.push_back({cols++, +1});
      vars[j].terms.push_back({cols++, -1});
    }
  }

  // 2. rows in the substituted columns, then slacks
  struct Row {
    Vec coeffs;
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : problem.constraints) {
    Row r{zeros(cols), c.relation, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(c.coeffs[j]) == 0) continue;
      r.rhs -= c.coeffs[j] * vars[j].offset;
      for (const auto& t : vars[j].terms) r.coeffs[t.col] += t.sign * c.coeffs[j];
    }
    rows.push_back(std::move(r));
  }
  for (const auto& u : upper_rows) {
    Row r{zeros(cols), Relation::LessEq, u.bound};
    r.coeffs[u.col] = 1;
    rows.push_back(std::move(r));
  }

  std::size_t slacks = 0;
  for (const auto& r : rows)
    if (r.relation != Relation::Equal) ++slacks;
  const std::size_t structural = cols + slacks;
  const std::size_t total = structural + rows.size();  // + one artificial per row

  Matrix a;
  Vec rhs;
  std::size_t next_slack = cols;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vec line = zeros(total);
    for (std::size_t j = 0; j < cols; ++j) line[j] = rows[i].coeffs[j];
    if (rows[i].relation == Relation::LessEq) line[next_slack++] = 1;
    if (rows[i].relation == Relation::GreaterEq) line[next_slack++] = -1;
    Rational b = rows[i].rhs;
    if (sgn(b) < 0) {
      for (auto& x : line) x = -x;
      b = -b;
    }
    line[structural + i] = 1;
    a.push_back(std::move(line));
    rhs.push_back(std::move(b));
  }

  Tableau tab(std::move(a), std::move(rhs), total);
  for (std::size_t i = 0; i < rows.size(); ++i) tab.basis().push_back(structural + i);

  // 3. phase one: maximise -(sum of artificials)
  Vec phase1 = zeros(total);
  for (std::size_t i = 0; i < rows.size(); ++i) phase1[structural + i] = -1;
  tab.maximize(phase1);
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basis()[i] >= structural && sgn(tab.rhs(i)) != 0) return {LPStatus::Infeasible, 0, {}};

  // drive zero-level artificials out of the basis, dropping redundant rows
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < structural) {
      ++i;
      continue;
    }
    std::size_t col = structural;
    for (std::size_t j = 0; j < structural; ++j)
      if (sgn(tab.row(i)[j]) != 0) {
        col = j;
        break;
      }
    if (col == structural) {
      tab.erase_row(i);
    } else {
      tab.pivot(i, col, nullptr);
      ++i;
    }
  }
  tab.truncate_columns(structural);

  // 4. phase two
  Vec c = zeros(structural);
  const int dir = problem.sense == Sense::Maximize ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& t : vars[j].terms) c[t.col] += dir * t.sign * problem.objective[j];
  if (!tab.maximize(c)) return {LPStatus::Unbounded, 0, {}};

  const Vec z = tab.solution();
  LPResult result;
  result.status = LPStatus::Optimal;
  result.point = zeros(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = vars[j].offset;
    for (const auto& t : vars[j].terms) x += t.sign * z[t.col];
    result.point[j] = x;
  }
  result.value = dot(problem.objective, result.point);
  return result;
}

CosetMinimum minimize_pl_over_coset(const PLQuasiNorm& p, const Vec& x0, const Subspace& l,
                                    const ConeSpace* extra_cone) {
  require_dim(x0, p.dim(), "minimize_pl_over_coset base point");
  if (l.dim_ambient() != p.dim()) fail(ErrorKind::Dimension, "minimize_pl_over_coset: subspace dimension");
  if (extra_cone && extra_cone->dim() != p.dim()) fail(ErrorKind::Dimension, "minimize_pl_over_coset: cone dimension");

  Region region;
  const std::size_t t0 = region.add_vars(l.dim());
  Affine z = Affine::constant(x0, region.num_vars());
  for (std::size_t i = 0; i < l.dim(); ++i) z.add_column(t0 + i, l.basis()[i]);
  if (extra_cone) region.require_member(*extra_cone, z);
  const Affine s = region.add_epigraph(p, z);

  const RegionResult r = region.optimize(Sense::Minimize, s.sum());
  CosetMinimum out;
  if (r.status == LPStatus::Infeasible) return out;
  if (r.status == LPStatus::Unbounded) fail(ErrorKind::Malformed, "quasi-norm LP unbounded below");
  out.feasible = true;
  out.value = r.value;
  out.coefficients = Vec(r.point.begin() + static_cast<std::ptrdiff_t>(t0),
                         r.point.begin() + static_cast<std::ptrdiff_t>(t0 + l.dim()));
  out.point = z.at(r.point);
  return out;
}

}  // namespace qnc
