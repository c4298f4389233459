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

#include "qnc/operators.hpp"

#include <map>
#include <mutex>
#include <set>

#include "qnc/error.hpp"
#include "qnc/lp.hpp"
#include "quotient_internal.hpp"
#include "region.hpp"

namespace qnc {

NormedCone upper_line() { return {ConeSpace::full(1), PLQuasiNorm::upper(1)}; }

struct LinMap::Cache {
  std::once_flag once;
  ExtReal value;
};

LinMap::LinMap(Matrix matrix, NormedCone source, NormedCone target)
    : matrix_(std::move(matrix)), source_(std::move(source)), target_(std::move(target)),
      cache_(std::make_shared<Cache>()) {
  if (source_.norm.dim() != source_.space.dim()) fail(ErrorKind::Dimension, "source norm and cone dimensions differ");
  if (target_.norm.dim() != target_.space.dim()) fail(ErrorKind::Dimension, "target norm and cone dimensions differ");
  if (!maps_into(matrix_, source_.space, target_.space))
    fail(ErrorKind::Precondition, "the matrix does not map the source cone into the target cone");
}

const ExtReal& LinMap::norm() const {
  std::call_once(cache_->once, [this] { cache_->value = op_norm(*this); });
  return cache_->value;
}

namespace {

// x in X with p(x) <= 1
Affine unit_ball(Region& region, const NormedCone& source) {
  const std::size_t n = source.space.dim();
  const Affine x = Affine::vars(region.add_vars(n), n);
  region.require_member(source.space, x);
  const Affine s = region.add_epigraph(source.norm, x);
  region.add(s.sum(), Relation::LessEq, 1);
  return x;
}

void require_equal(Region& region, const Affine& a, const Vec& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) region.add(a[i], Relation::Equal, b[i]);
}

}  // namespace

ExtReal op_norm(const LinMap& f) {
  Region region;
  const Affine y = unit_ball(region, f.source()).apply(f.matrix());
  const std::vector<Vec> pieces = region_pieces(region, f.target().norm, y);
  return sup_of_pieces(region, pieces, y).value;
}

bool is_continuous(const LinMap& f) { return f.norm().is_finite(); }

LinMap compose(const LinMap& g, const LinMap& f) {
  if (!(f.target() == g.source()))
    fail(ErrorKind::Precondition, "compose: the target of the inner map differs from the source of the outer map");
  return LinMap(g.matrix() * f.matrix(), f.source(), g.target());
}

// ---------------------------------------------------------------------------

namespace {

struct PairRegion {
  Region region;
  Affine x;
  Affine y;  // x + k with f(k) = 0
};

PairRegion same_image_pairs(const LinMap& f) {
  PairRegion pr;
  const std::size_t n = f.dim_in();
  pr.x = Affine::vars(pr.region.add_vars(n), n);
  const Affine k = Affine::vars(pr.region.add_vars(n), n);
  pr.y = pr.x + k;
  pr.region.require_member(f.source().space, pr.x);
  pr.region.require_member(f.source().space, pr.y);
  require_equal(pr.region, k.apply(f.matrix()), zeros(f.dim_out()));
  pr.region.add_box(pr.x, 1);
  pr.region.add_box(k, 1);
  return pr;
}

InjectivityResult witness_or_fail(const PairRegion& pr, const Vec& point,
                                  const std::function<bool(const Vec&, const Vec&)>& differs, const LinMap& f) {
  auto ok = [&](const Vec& pt) {
    const Vec x = pr.x.at(pt);
    const Vec y = pr.y.at(pt);
    return member(f.source().space, x) && member(f.source().space, y) && f(x) == f(y) && differs(x, y);
  };
  const auto inside = pull_inside(pr.region, point, ok);
  if (!inside) fail(ErrorKind::Malformed, "injectivity witness could not be moved into the cone");
  return {false, std::make_pair(pr.x.at(*inside), pr.y.at(*inside))};
}

}  // namespace

InjectivityResult is_p_injective(const LinMap& f) {
  const PLQuasiNorm& p = f.source().norm;
  for (const auto& g : p.linear_pieces()) {
    PairRegion pr = same_image_pairs(f);
    const Affine s = pr.region.add_epigraph(p, pr.x);
    // g.(x+k) - sum(s) <= p(x+k) - p(x)
    const RegionResult r = pr.region.optimize(Sense::Maximize, pr.y.dot(g) - s.sum());
    if (r.status != LPStatus::Optimal || sgn(r.value) <= 0) continue;
    return witness_or_fail(pr, r.point, [&](const Vec& x, const Vec& y) { return p(x) != p(y); }, f);
  }
  return {};
}

QuotientSpace kernel_quotient(const LinMap& f) {
  const Matrix& m = f.matrix();
  Matrix neg;
  for (const auto& row : m) neg.push_back(-row);
  const ConeSpace y =
      ConeSpace::polyhedral(stack(stack(f.source().space.closure_constraints(), m), neg), f.dim_in());
  return make_quotient(f.source().space, f.source().norm, y, kDefaultFalsifierBudget);
}

InjectivityResult is_G_injective(const LinMap& f, const QuotientSpace& qs_ker) {
  if (!(qs_ker.space() == f.source().space)) fail(ErrorKind::Precondition, "is_G_injective: quotient of another cone");
  for (const Vec& m : f.matrix())
    for (const auto& b : qs_ker.g().basis())
      if (sgn(dot(m, b)) != 0) fail(ErrorKind::Precondition, "is_G_injective: G is not inside the kernel");
  const Subspace& g = qs_ker.g();
  for (const auto& c : g.annihilator()) {
    for (Sense sense : {Sense::Maximize, Sense::Minimize}) {
      PairRegion pr = same_image_pairs(f);
      const RegionResult r = pr.region.optimize(sense, (pr.y - pr.x).dot(c));
      if (r.status != LPStatus::Optimal || sgn(r.value) == 0) continue;
      return witness_or_fail(pr, r.point, [&](const Vec& x, const Vec& y) { return !g.contains(y - x); }, f);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

ExtReal fiber_min(const LinMap& f, const Vec& y) {
  require_dim(y, f.dim_out(), "fiber target");
  Region region;
  const std::size_t n = f.dim_in();
  const Affine x = Affine::vars(region.add_vars(n), n);
  region.require_member(f.source().space, x);
  require_equal(region, x.apply(f.matrix()), y);
  const Affine s = region.add_epigraph(f.source().norm, x);
  const RegionResult r = region.optimize(Sense::Minimize, s.sum());
  if (r.status == LPStatus::Infeasible) return ExtReal::infinity();
  return ExtReal(r.value);
}

ExtReal sup_ratio(const Matrix& b, const PLQuasiNorm& q, const std::function<ExtReal(const Vec&)>& numer) {
  const std::size_t dim = q.dim();
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < q.rows(); ++i)
    if ((sgn(q.wplus()[i]) > 0 || sgn(q.wminus()[i]) > 0) && !is_zero(q.matrix()[i])) active.push_back(i);
  if (active.size() > 16) fail(ErrorKind::Unsupported, "quasi-norm has too many rows for cell enumeration");

  std::map<Vec, ExtReal> memo;
  auto h = [&](const Vec& v) -> const ExtReal& {
    auto it = memo.find(v);
    if (it == memo.end()) it = memo.emplace(v, numer(v)).first;
    return it->second;
  };

  ExtReal best(0);
  for (std::size_t mask = 0; mask < (std::size_t{1} << active.size()); ++mask) {
    Matrix cell = b;
    for (std::size_t j = 0; j < active.size(); ++j) {
      const Vec& row = q.matrix()[active[j]];
      cell.push_back((mask >> j) & 1 ? row : -row);
    }
    const ConeGenerators gens = cone_generators(cell, dim);
    for (const auto& l : gens.lineality)
      for (const Vec& v : {l, Vec(-l)})
        if (h(v) > ExtReal(0)) return ExtReal::infinity();
    for (const auto& r : gens.rays) {
      const ExtReal& value = h(r);
      if (value.is_infinite()) return value;
      const Rational qr = q(r);
      if (sgn(qr) == 0) {
        if (value > ExtReal(0)) return ExtReal::infinity();
        continue;
      }
      best = max(best, ExtReal(value.value() / qr));
    }
  }
  return best;
}

Openness openness_constant(const LinMap& f) {
  const std::size_t r = rank(f.matrix(), f.dim_in());
  if (r < f.dim_out())
    return {false, 0, "not onto: rank " + std::to_string(r) + " < target dimension " + std::to_string(f.dim_out())};
  const ExtReal m = sup_ratio(f.target().space.closure_constraints(), f.target().norm,
                              [&](const Vec& y) { return fiber_min(f, y); });
  if (m.is_infinite()) return {false, 0, "no finite M: some y with q(y) <= 1 needs arbitrarily large p(x)"};
  return {true, m.value(), ""};
}

ExtReal phi_norm(const QuotientSpace& qs) {
  return sup_ratio(qs.space().closure_constraints(), qs.norm(), [&](const Vec& x) {
    return ExtReal(minimize_pl_over_coset(qs.norm(), x, qs.g()).value);
  });
}

ExtReal quotient_map_norm(const QuotientSpace& qs, const Matrix& t, const NormedCone& target) {
  const std::size_t n = qs.space().dim();
  const auto& cols = qs.g().complement_columns();
  if (t.size() != target.space.dim()) fail(ErrorKind::Dimension, "quotient map: output dimension");
  for (const auto& row : t) require_dim(row, cols.size(), "quotient map row");

  Region region;
  const std::size_t z0 = region.add_vars(cols.size());
  const std::size_t t0 = region.add_vars(qs.g().dim());
  Affine x = Affine::constant(zeros(n));
  for (std::size_t i = 0; i < cols.size(); ++i) x.add_column(z0 + i, unit(n, cols[i]));
  for (std::size_t j = 0; j < qs.g().dim(); ++j) x.add_column(t0 + j, qs.g().basis()[j]);
  region.require_member(qs.space(), x);
  const Affine s = region.add_epigraph(qs.norm(), x);
  region.add(s.sum(), Relation::LessEq, 1);

  const Affine y = Affine::vars(z0, cols.size()).apply(t);
  return sup_of_pieces(region, region_pieces(region, target.norm, y), y).value;
}

// ---------------------------------------------------------------------------

ExtReal functional_norm(const NormedCone& source, const Vec& h) {
  return op_norm(LinMap({h}, source, upper_line()));
}

std::vector<DualElement> polar(const QuotientSpace& qs) {
  const std::size_t n = qs.space().dim();
  const NormedCone source{qs.space(), qs.norm()};

  Matrix v;
  for (const auto& g : qs.norm().linear_pieces())
    if (!is_zero(g)) v.push_back(g);
  for (const auto& a : qs.space().closure_constraints()) v.push_back(-a);
  // continuous functionals D = cone(v) = {h : h.r >= 0 for r in rays(D*), h.l = 0}
  const ConeGenerators dual = cone_generators(v, n);
  Matrix h_rows = dual.rays;
  for (const auto& l : dual.lineality) {
    h_rows.push_back(l);
    h_rows.push_back(-l);
  }

  // h = beta C with C spanning the annihilator of G
  const std::vector<Vec> c = qs.g().annihilator();
  std::set<Vec> found;
  if (!c.empty()) {
    Matrix beta_rows;
    for (const auto& w : h_rows) {
      Vec row;
      for (const auto& ci : c) row.push_back(dot(ci, w));
      beta_rows.push_back(std::move(row));
    }
    const ConeGenerators beta = cone_generators(beta_rows, c.size());
    std::vector<Vec> dirs = beta.rays;
    for (const auto& l : beta.lineality) {
      dirs.push_back(l);
      dirs.push_back(-l);
    }
    for (const auto& d : dirs) {
      Vec h = zeros(n);
      for (std::size_t i = 0; i < c.size(); ++i) h = h + d[i] * c[i];
      if (!is_zero(h)) found.insert(primitive(h));
    }
  }

  std::vector<DualElement> out;
  for (const auto& h : found) {
    const ExtReal norm = functional_norm(source, h);
    if (norm.is_infinite()) fail(ErrorKind::Malformed, "polar generator " + to_string(h) + " is not continuous");
    out.push_back({h, norm.value()});
  }
  if (out.empty()) out.push_back({zeros(n), 0});
  return out;
}

QuotientDualIso::QuotientDualIso(QuotientSpace qs) : qs_(std::move(qs)) {
  if (!qs_.certified_closed())
    fail(ErrorKind::Precondition,
         "the dual isometry needs G_Y closed in T(d_p); certificate: " + to_string(qs_.certificate()));
  const std::size_t n = qs_.space().dim();
  const auto& cols = qs_.g().complement_columns();
  pullback_ = zero_matrix(cols.size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec rep = qs_.g().reduce(unit(n, i));
    for (std::size_t c = 0; c < cols.size(); ++c) pullback_[c][i] = rep[cols[c]];
  }
}

Vec QuotientDualIso::to_polar(const Vec& f) const {
  require_dim(f, pullback_.size(), "quotient functional");
  return transpose(pullback_, qs_.space().dim()) * f;
}

Vec QuotientDualIso::to_quotient_dual(const Vec& h) const {
  require_dim(h, qs_.space().dim(), "functional");
  for (const auto& g : qs_.g().basis())
    if (sgn(dot(h, g)) != 0) fail(ErrorKind::Precondition, "functional " + to_string(h) + " does not vanish on G_Y");
  Vec out;
  for (auto c : qs_.g().complement_columns()) out.push_back(h[c]);
  return out;
}

ExtReal quotient_functional_norm(const QuotientSpace& qs, const Vec& f) {
  return quotient_map_norm(qs, {f}, upper_line());
}

// ---------------------------------------------------------------------------

Factorization factorize(const LinMap& t) {
  QuotientSpace qs = kernel_quotient(t);
  if (!qs.certified_closed())
    fail(ErrorKind::Precondition, "G_ker T is not closed in T(d_p), so T does not factor through a quasi-normed "
                                  "quotient; certificate: " + to_string(qs.certificate()));
  Matrix tt;
  for (const auto& row : t.matrix()) {
    Vec r;
    for (auto c : qs.g().complement_columns()) r.push_back(row[c]);
    tt.push_back(std::move(r));
  }
  const ExtReal norm_tt = quotient_map_norm(qs, tt, t.target());
  return {std::move(qs), std::move(tt), t.norm(), norm_tt};
}

Rational lower_bound_constant(const LinMap& f) {
  const PLQuasiNorm& p = f.source().norm;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < p.rows(); ++i)
    if ((sgn(p.wplus()[i]) > 0 || sgn(p.wminus()[i]) > 0) && !is_zero(p.matrix()[i])) active.push_back(i);
  if (active.size() > 16) fail(ErrorKind::Unsupported, "quasi-norm has too many rows for cell enumeration");

  std::optional<Rational> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << active.size()); ++mask) {
    Region region;
    const std::size_t n = f.dim_in();
    const Affine x = Affine::vars(region.add_vars(n), n);
    region.require_member(f.source().space, x);
    Vec grad = zeros(n);
    for (std::size_t j = 0; j < active.size(); ++j) {
      const std::size_t i = active[j];
      const bool up = (mask >> j) & 1;
      const Vec row = up ? p.matrix()[i] : Vec(-p.matrix()[i]);
      region.add(x.dot(row), Relation::GreaterEq, 0);
      grad = grad + (up ? p.wplus()[i] : p.wminus()[i]) * row;
    }
    region.add(x.dot(grad), Relation::Equal, 1);
    const Affine s = region.add_epigraph(f.target().norm, x.apply(f.matrix()));
    const RegionResult r = region.optimize(Sense::Minimize, s.sum());
    if (r.status != LPStatus::Optimal) continue;
    if (!best || r.value < *best) best = r.value;
  }
  return best.value_or(Rational(0));
}

ExtReal inverse_bound_constant(const LinMap& f) {
  Region region;
  const std::size_t n = f.dim_in();
  const Affine x = Affine::vars(region.add_vars(n), n);
  region.require_member(f.source().space, x);
  const Affine s = region.add_epigraph(f.target().norm, x.apply(f.matrix()));
  region.add(s.sum(), Relation::LessEq, 1);
  return sup_of_pieces(region, region_pieces(region, f.source().norm, x), x).value;
}

AnalysisReport analyze(const LinMap& f) {
  AnalysisReport report;
  report.norm = f.norm();
  report.continuous = report.norm.is_finite();
  report.p_injective = is_p_injective(f);
  const QuotientSpace qs = kernel_quotient(f);
  report.g_injective = is_G_injective(f, qs);
  report.openness = openness_constant(f);
  try {
    report.factorization = factorize(f);
  } catch (const Error& e) {
    report.factorization_error = e.what();
  }
  return report;
}

}  // namespace qnc
