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

#include "region.hpp"

#include <set>

#include "qnc/error.hpp"
#include "qnc/operators.hpp"

namespace qnc {

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  for (const auto& [v, c] : o.coeffs) {
    auto& slot = coeffs[v];
    slot += c;
    if (sgn(slot) == 0) coeffs.erase(v);
  }
  constant += o.constant;
  return *this;
}

LinExpr& LinExpr::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    coeffs.clear();
    constant = 0;
    return *this;
  }
  for (auto& [v, c] : coeffs) c *= r;
  constant *= r;
  return *this;
}

Rational LinExpr::at(const Vec& point) const {
  Rational s = constant;
  for (const auto& [v, c] : coeffs) s += c * point.at(v);
  return s;
}

LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
LinExpr operator-(LinExpr a, const LinExpr& b) { return a += Rational(-1) * b; }
LinExpr operator*(const Rational& r, LinExpr a) { return a *= r; }

Affine Affine::constant(const Vec& c, std::size_t) {
  std::vector<LinExpr> rows(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) rows[i].constant = c[i];
  return Affine(std::move(rows));
}

Affine Affine::vars(std::size_t first, std::size_t dim) {
  std::vector<LinExpr> rows;
  for (std::size_t i = 0; i < dim; ++i) rows.push_back(LinExpr::var(first + i));
  return Affine(std::move(rows));
}

void Affine::add_column(std::size_t var, const Vec& col) {
  require_dim(col, rows_.size(), "affine column");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (sgn(col[i]) == 0) continue;
    LinExpr t;
    t.coeffs[var] = col[i];
    rows_[i] += t;
  }
}

Affine Affine::apply(const Matrix& m) const {
  std::vector<LinExpr> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    require_dim(m[i], rows_.size(), "affine map");
    for (std::size_t j = 0; j < rows_.size(); ++j)
      if (sgn(m[i][j]) != 0) out[i] += m[i][j] * rows_[j];
  }
  return Affine(std::move(out));
}

LinExpr Affine::dot(const Vec& c) const {
  require_dim(c, rows_.size(), "affine dot");
  LinExpr out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (sgn(c[i]) != 0) out += c[i] * rows_[i];
  return out;
}

LinExpr Affine::sum() const {
  LinExpr out;
  for (const auto& r : rows_) out += r;
  return out;
}

Vec Affine::at(const Vec& point) const {
  Vec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = rows_[i].at(point);
  return out;
}

Affine operator+(const Affine& a, const Affine& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::Dimension, "affine sum");
  Affine out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

Affine operator-(const Affine& a, const Affine& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::Dimension, "affine difference");
  Affine out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] += Rational(-1) * b[i];
  return out;
}

// ---------------------------------------------------------------------------

std::size_t Region::add_vars(std::size_t k) {
  const std::size_t first = num_vars_;
  num_vars_ += k;
  lower_.resize(num_vars_);
  upper_.resize(num_vars_);
  return first;
}

void Region::add(const LinExpr& lhs, Relation rel, const Rational& rhs) { rows_.push_back({lhs, rel, rhs}); }

void Region::set_bounds(std::size_t var, std::optional<Rational> lo, std::optional<Rational> hi) {
  lower_.at(var) = std::move(lo);
  upper_.at(var) = std::move(hi);
}

void Region::require_member(const ConeSpace& space, const Affine& z) {
  if (z.dim() != space.dim()) fail(ErrorKind::Dimension, "cone membership requirement");
  for (const auto& a : space.closure_constraints()) add(z.dot(a), Relation::GreaterEq, 0);
  if (space.is_strict()) strict_.push_back(z);
}

Affine Region::add_epigraph(const PLQuasiNorm& p, const Affine& z) {
  if (z.dim() != p.dim()) fail(ErrorKind::Dimension, "epigraph of quasi-norm");
  const Affine mz = z.apply(p.matrix());
  const std::size_t first = add_vars(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    const std::size_t s = first + i;
    set_bounds(s, Rational(0), std::nullopt);
    const LinExpr sv = LinExpr::var(s);
    if (sgn(p.wplus()[i]) != 0) add(sv - p.wplus()[i] * mz[i], Relation::GreaterEq, 0);
    if (sgn(p.wminus()[i]) != 0) add(sv + p.wminus()[i] * mz[i], Relation::GreaterEq, 0);
  }
  return Affine::vars(first, p.rows());
}

void Region::add_box(const Affine& z, const Rational& bound) {
  for (std::size_t i = 0; i < z.dim(); ++i) {
    add(z[i], Relation::LessEq, bound);
    add(z[i], Relation::GreaterEq, -bound);
  }
}

LinearConstraint Region::dense(const LinExpr& lhs, Relation rel, const Rational& rhs) const {
  LinearConstraint c{zeros(num_vars_), rel, rhs - lhs.constant};
  for (const auto& [v, coef] : lhs.coeffs) c.coeffs.at(v) = coef;
  return c;
}

LPProblem Region::to_problem(Sense sense, const LinExpr& objective,
                             const std::vector<LinearConstraint>& extra) const {
  LPProblem p;
  p.sense = sense;
  p.objective = zeros(num_vars_);
  for (const auto& [v, c] : objective.coeffs) p.objective.at(v) = c;
  for (const auto& r : rows_) p.constraints.push_back(dense(r.lhs, r.rel, r.rhs));
  p.constraints.insert(p.constraints.end(), extra.begin(), extra.end());
  p.lower = lower_;
  p.upper = upper_;
  return p;
}

RegionResult Region::optimize(Sense sense, const LinExpr& objective) const {
  interior_.reset();
  std::vector<LinearConstraint> pins;
  std::vector<bool> pinned(strict_.size(), false);
  std::vector<Vec> witnesses;

  // Decide, for each strict requirement, whether z_0 > 0 is attainable.
  // Pinning one requirement can only shrink the region, so iterate.
  for (bool changed = !strict_.empty(); changed;) {
    changed = false;
    witnesses.clear();
    for (std::size_t k = 0; k < strict_.size(); ++k) {
      if (pinned[k]) continue;
      LPResult r = solve(to_problem(Sense::Maximize, strict_[k][0], pins));
      if (r.status == LPStatus::Infeasible) return {LPStatus::Infeasible, 0, {}};
      if (r.status == LPStatus::Unbounded) {
        // cap z_0 just above some feasible value to get a finite witness
        const LPResult any = solve(to_problem(Sense::Minimize, LinExpr{}, pins));
        const Rational z0 = strict_[k][0].at(any.point);
        std::vector<LinearConstraint> extra = pins;
        extra.push_back(dense(strict_[k][0], Relation::LessEq, (z0 > 0 ? z0 : Rational(0)) + 1));
        r = solve(to_problem(Sense::Maximize, strict_[k][0], extra));
      }
      if (sgn(r.value + strict_[k][0].constant) > 0) {
        witnesses.push_back(r.point);
        continue;
      }
      pinned[k] = true;
      changed = true;
      for (std::size_t i = 0; i < strict_[k].dim(); ++i) pins.push_back(dense(strict_[k][i], Relation::Equal, 0));
    }
  }

  const LPResult r = solve(to_problem(sense, objective, pins));
  if (!witnesses.empty()) {
    Vec avg = zeros(num_vars_);
    for (const auto& w : witnesses) avg = avg + w;
    interior_ = Rational(1, static_cast<long>(witnesses.size())) * avg;
  }
  RegionResult out{r.status, r.value, r.point};
  if (r.status == LPStatus::Optimal) out.value += objective.constant;
  return out;
}

PiecewiseSup sup_of_pieces(const Region& region, const std::vector<Vec>& pieces, const Affine& z) {
  PiecewiseSup best{ExtReal(0), {}};
  bool have = false;
  Rational best_value;
  for (const auto& g : pieces) {
    const RegionResult r = region.optimize(Sense::Maximize, z.dot(g));
    if (r.status == LPStatus::Unbounded) return {ExtReal::infinity(), {}};
    if (r.status == LPStatus::Infeasible) fail(ErrorKind::Precondition, "supremum over an empty region");
    if (!have || r.value > best_value) {
      have = true;
      best_value = r.value;
      best.point = r.point;
    }
  }
  if (have) best.value = ExtReal(best_value < 0 ? Rational(0) : best_value);
  return best;
}

std::optional<Vec> pull_inside(const Region& region, const Vec& point, const std::function<bool(const Vec&)>& ok) {
  if (ok(point)) return point;
  const auto& inner = region.interior_point();
  if (!inner) return std::nullopt;
  Rational lambda(1, 2);
  for (int k = 0; k < 64; ++k, lambda /= 2) {
    const Vec q = (1 - lambda) * point + lambda * *inner;
    if (ok(q)) return q;
  }
  return std::nullopt;
}

std::vector<Vec> region_pieces(const Region& region, const PLQuasiNorm& q, const Affine& z) {
  if (q.rows() <= kPruneRows) return q.linear_pieces();
  const Affine mz = z.apply(q.matrix());
  Vec fixed = zeros(q.dim());
  Matrix ups, downs;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    const Vec up = q.wplus()[i] * q.matrix()[i];
    const Vec down = -(q.wminus()[i] * q.matrix()[i]);
    if (up == down) {
      fixed = fixed + up;
      continue;
    }
    const RegionResult hi = region.optimize(Sense::Maximize, mz[i]);
    if (hi.status == LPStatus::Optimal && sgn(hi.value) <= 0) {
      fixed = fixed + down;
      continue;
    }
    const RegionResult lo = region.optimize(Sense::Minimize, mz[i]);
    if (lo.status == LPStatus::Optimal && sgn(lo.value) >= 0) {
      fixed = fixed + up;
      continue;
    }
    ups.push_back(up);
    downs.push_back(down);
  }
  std::set<Vec> pieces{fixed};
  for (std::size_t i = 0; i < ups.size(); ++i) {
    std::set<Vec> next;
    for (const auto& s : pieces) {
      next.insert(s + ups[i]);
      next.insert(s + downs[i]);
    }
    if (next.size() > (1u << 16))
      fail(ErrorKind::Unsupported, "quasi-norm has too many linear pieces on this region for exact decomposition");
    pieces = std::move(next);
  }
  return {pieces.begin(), pieces.end()};
}

bool maps_into(const Matrix& f, const ConeSpace& source, const ConeSpace& target) {
  if (f.size() != target.dim()) fail(ErrorKind::Dimension, "map output dimension differs from target cone");
  for (const auto& row : f) require_dim(row, source.dim(), "map row");
  const std::size_t n = source.dim();

  auto make_region = [&](Affine& y) {
    Region region;
    const Affine x = Affine::vars(region.add_vars(n), n);
    region.require_member(source, x);
    region.add_box(x, 1);
    y = x.apply(f);
    return region;
  };

  for (const auto& a : target.closure_constraints()) {
    Affine y;
    const Region region = make_region(y);
    const RegionResult r = region.optimize(Sense::Minimize, y.dot(a));
    if (r.status == LPStatus::Optimal && sgn(r.value) < 0) return false;
  }
  if (target.is_strict()) {
    // the image already lies in the orthant; reject nonzero images with y_0 = 0
    Affine y;
    Region region = make_region(y);
    region.add(y[0], Relation::Equal, 0);
    const RegionResult r = region.optimize(Sense::Maximize, y.sum());
    if (r.status == LPStatus::Optimal && sgn(r.value) > 0) return false;
  }
  return true;
}

bool cone_includes(const ConeSpace& outer, const ConeSpace& inner) {
  if (outer.dim() != inner.dim()) fail(ErrorKind::Dimension, "cone inclusion: dimensions differ");
  return maps_into(identity(inner.dim()), inner, outer);
}

}  // namespace qnc
