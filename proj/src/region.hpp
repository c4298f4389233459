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

#pragma once

// Internal LP modelling layer: affine expressions over LP variables, cone
// membership requirements (including the strict-first-coordinate family),
// PL epigraphs. Everything in the library that optimises goes through here.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qnc/cone.hpp"
#include "qnc/lp.hpp"
#include "qnc/qnorm.hpp"

namespace qnc {

struct LinExpr {
  std::map<std::size_t, Rational> coeffs;
  Rational constant = 0;

  static LinExpr var(std::size_t v) {
    LinExpr e;
    e.coeffs[v] = 1;
    return e;
  }
  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator*=(const Rational& r);
  Rational at(const Vec& point) const;
};

LinExpr operator+(LinExpr a, const LinExpr& b);
LinExpr operator-(LinExpr a, const LinExpr& b);
LinExpr operator*(const Rational& r, LinExpr a);

/// A vector of affine expressions.
class Affine {
 public:
  Affine() = default;
  explicit Affine(std::vector<LinExpr> rows) : rows_(std::move(rows)) {}

  static Affine constant(const Vec& c, std::size_t /*num_vars*/ = 0);
  /// (v_first, ..., v_{first+dim-1})
  static Affine vars(std::size_t first, std::size_t dim);

  std::size_t dim() const { return rows_.size(); }
  const LinExpr& operator[](std::size_t i) const { return rows_[i]; }
  LinExpr& operator[](std::size_t i) { return rows_[i]; }

  /// this += col * v_var
  void add_column(std::size_t var, const Vec& col);
  Affine apply(const Matrix& m) const;
  LinExpr dot(const Vec& c) const;
  LinExpr sum() const;
  Vec at(const Vec& point) const;

  friend Affine operator+(const Affine& a, const Affine& b);
  friend Affine operator-(const Affine& a, const Affine& b);

 private:
  std::vector<LinExpr> rows_;
};

struct RegionResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  Vec point;
};

class Region {
 public:
  std::size_t add_vars(std::size_t k);
  std::size_t num_vars() const { return num_vars_; }

  void add(const LinExpr& lhs, Relation rel, const Rational& rhs);
  void set_bounds(std::size_t var, std::optional<Rational> lo, std::optional<Rational> hi);

  /// z in X. Strict cones are relaxed to their closure when some feasible
  /// point has z_0 > 0 and pinned to z = 0 otherwise.
  void require_member(const ConeSpace& space, const Affine& z);
  /// New variables s (one per row of p) with sum(s) >= p(z) on the region and
  /// equality at any minimiser of sum(s).
  Affine add_epigraph(const PLQuasiNorm& p, const Affine& z);
  /// -bound <= z_i <= bound
  void add_box(const Affine& z, const Rational& bound);

  RegionResult optimize(Sense sense, const LinExpr& objective) const;

  /// After optimize(): a feasible point meeting every relaxed strict
  /// requirement strictly (z_0 > 0), if any requirement was relaxed.
  const std::optional<Vec>& interior_point() const { return interior_; }

 private:
  LPProblem to_problem(Sense sense, const LinExpr& objective, const std::vector<LinearConstraint>& extra) const;
  LinearConstraint dense(const LinExpr& lhs, Relation rel, const Rational& rhs) const;

  struct Row {
    LinExpr lhs;
    Relation rel;
    Rational rhs;
  };
  std::size_t num_vars_ = 0;
  std::vector<Row> rows_;
  std::vector<std::optional<Rational>> lower_, upper_;
  std::vector<Affine> strict_;
  mutable std::optional<Vec> interior_;
};

/// sup of max_s (g_s . z) over the region, one LP per piece g_s.
/// Returns infinity if any piece is unbounded. The region must be feasible.
struct PiecewiseSup {
  ExtReal value;
  Vec point;  // maximiser when finite
};
PiecewiseSup sup_of_pieces(const Region& region, const std::vector<Vec>& pieces, const Affine& z);

/// `point` if ok(point), else the first point moved towards the region's
/// interior point (after optimize) that satisfies ok.
std::optional<Vec> pull_inside(const Region& region, const Vec& point, const std::function<bool(const Vec&)>& ok);

/// Above this many rows, region_pieces first drops the sign choices that
/// are fixed on the region.
constexpr std::size_t kPruneRows = 6;

/// Gradients g_s with q(z) = max_s g_s.z for every z of the region.
std::vector<Vec> region_pieces(const Region& region, const PLQuasiNorm& q, const Affine& z);

/// inner ⊆ outer, decided exactly (one bounded LP per constraint of outer).
bool cone_includes(const ConeSpace& outer, const ConeSpace& inner);

}  // namespace qnc
