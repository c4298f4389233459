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

#include "qnc/quotient.hpp"

#include <algorithm>

#include "qnc/error.hpp"
#include "qnc/lp.hpp"
#include "quotient_internal.hpp"
#include "region.hpp"

namespace qnc {

std::string to_string(const ClosedCertificate& c) {
  if (std::holds_alternative<CertifiedClosed>(c)) return "CLOSED";
  if (const auto* f = std::get_if<Falsified>(&c)) return "FALSIFIED witness=" + to_string(f->witness);
  return "UNKNOWN";
}

namespace {

bool zero_distance_witness(const ConeSpace& x, const PLQuasiNorm& p, const Subspace& g, const Vec& v) {
  if (!member(x, v) || g.contains(v)) return false;
  const ExtReal d = dist_to_subspace(p, x, v, g, Direction::FromX);
  return d == ExtReal(0);
}

// Integer points of Z^n with max |v_i| = r, lexicographic order.
template <class F>
bool for_each_shell_point(std::size_t n, long r, F&& f) {
  std::vector<long> v(n, -r);
  while (true) {
    const bool on_shell = std::any_of(v.begin(), v.end(), [&](long c) { return c == r || c == -r; });
    if (on_shell) {
      Vec q;
      for (long c : v) q.emplace_back(c);
      if (f(q)) return true;
    }
    std::size_t i = n;
    while (i > 0 && v[i - 1] == r) v[--i] = -r;
    if (i == 0) return false;
    ++v[i - 1];
  }
}

std::optional<Vec> grid_prepass(const ConeSpace& x, const PLQuasiNorm& p, const Subspace& g, std::size_t budget) {
  std::size_t tested = 0;
  std::size_t visited = 0;
  const std::size_t visit_cap = budget * 64;
  std::optional<Vec> found;
  for (long r = 1; tested < budget && visited < visit_cap; ++r) {
    for_each_shell_point(x.dim(), r, [&](const Vec& v) {
      if (++visited > visit_cap || tested >= budget) return true;
      if (!member(x, v) || g.contains(v)) return false;
      ++tested;
      if (zero_distance_witness(x, p, g, v)) {
        found = v;
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

// G is closed in T(d_p) iff every w in lineality(X) with p(w) = 0 lies in G.
// A w outside G gives the witness -w.
std::optional<Vec> exact_decision(const ConeSpace& x, const PLQuasiNorm& p, const Subspace& g) {
  const Subspace lin = lineality(x);
  if (lin.dim() == 0 || g.includes(lin)) return std::nullopt;

  Region region;
  const std::size_t t0 = region.add_vars(lin.dim());
  Affine w = Affine::constant(zeros(x.dim()));
  for (std::size_t j = 0; j < lin.dim(); ++j) w.add_column(t0 + j, lin.basis()[j]);
  const Affine mw = w.apply(p.matrix());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (sgn(p.wplus()[i]) > 0) region.add(mw[i], Relation::LessEq, 0);
    if (sgn(p.wminus()[i]) > 0) region.add(mw[i], Relation::GreaterEq, 0);
  }
  region.add_box(w, 1);

  for (const auto& c : g.annihilator()) {
    for (Sense sense : {Sense::Maximize, Sense::Minimize}) {
      const RegionResult r = region.optimize(sense, w.dot(c));
      if (r.status != LPStatus::Optimal || sgn(r.value) == 0) continue;
      return primitive(-w.at(r.point));
    }
  }
  return std::nullopt;
}

std::optional<Vec> falsify(const ConeSpace& x, const PLQuasiNorm& p, const Subspace& g, std::size_t budget) {
  std::optional<Vec> w = grid_prepass(x, p, g, budget);
  if (!w) w = exact_decision(x, p, g);
  if (w && !zero_distance_witness(x, p, g, *w))
    fail(ErrorKind::Malformed, "closedness witness failed verification: " + to_string(*w));
  return w;
}

}  // namespace

QuotientSpace make_quotient(const ConeSpace& x, const PLQuasiNorm& p, const ConeSpace& y, std::size_t budget) {
  if (p.dim() != x.dim() || y.dim() != x.dim()) fail(ErrorKind::Dimension, "quotient: dimensions differ");
  Subspace g = lineality(y);
  ClosedCertificate cert = CertifiedClosed{};
  if (auto w = falsify(x, p, g, budget)) cert = Falsified{std::move(*w)};
  return QuotientSpace(std::make_shared<const QuotientSpace::Impl>(
      QuotientSpace::Impl{x, p, y, std::move(g), std::move(cert)}));
}

QuotientSpace build_quotient(const ConeSpace& x, const PLQuasiNorm& p, const ConeSpace& y, std::size_t budget) {
  if (p.dim() != x.dim() || y.dim() != x.dim()) fail(ErrorKind::Dimension, "quotient: dimensions differ");
  if (!cone_includes(x, y)) fail(ErrorKind::Precondition, "quotient: the subcone Y is not contained in X");
  // A degenerate direction of p inside lineality(X) is harmless once it is
  // divided out, so only those outside G_Y are rejected.
  if (!validate_qnorm(p, x)) {
    const Subspace degenerate = symmetric_kernel(p).intersect(lineality(x));
    if (!lineality(y).includes(degenerate))
      fail(ErrorKind::Precondition, "quotient: p is not a quasi-norm on X (some x != 0 has p(x) = p(-x) = 0)");
  }
  return make_quotient(x, p, y, budget);
}

std::optional<Vec> falsify_closedness(const QuotientSpace& qs, std::size_t budget) {
  return falsify(qs.space(), qs.norm(), qs.g(), budget);
}

// ---------------------------------------------------------------------------

QuotientClass class_of(const QuotientSpace& qs, const Vec& x) {
  require_dim(x, qs.space().dim(), "class_of");
  if (!member(qs.space(), x)) fail(ErrorKind::NotMember, "class_of: " + to_string(x) + " is not in X");
  return QuotientClass(qs, qs.g().reduce(x));
}

QuotientClass class_add(const QuotientClass& a, const QuotientClass& b) {
  if (!a.qs_.same_as(b.qs_)) fail(ErrorKind::Precondition, "class_add: classes of different quotients");
  return QuotientClass(a.qs_, a.qs_.g().reduce(a.rep_ + b.rep_));
}

QuotientClass class_scale(const Rational& r, const QuotientClass& a) {
  if (sgn(r) < 0) fail(ErrorKind::Precondition, "class_scale: negative scalar");
  return QuotientClass(a.qs_, r * a.rep_);
}

Vec class_coordinates(const QuotientClass& c) {
  Vec out;
  for (auto j : c.space().g().complement_columns()) out.push_back(c.rep()[j]);
  return out;
}

Vec embed_coordinates(const QuotientSpace& qs, const Vec& coords) {
  const auto& cols = qs.g().complement_columns();
  require_dim(coords, cols.size(), "class coordinates");
  Vec out = zeros(qs.space().dim());
  for (std::size_t i = 0; i < cols.size(); ++i) out[cols[i]] = coords[i];
  return out;
}

namespace {

void require_prenorm_ok(const QuotientSpace& qs, bool allow_prenorm) {
  if (allow_prenorm || qs.certified_closed()) return;
  std::string msg = "G_Y is not closed in T(d_p), so p-hat is only a prenorm on X/Y";
  if (const auto* f = std::get_if<Falsified>(&qs.certificate()))
    msg += ": [" + to_string(-f->witness) + "] != [0] yet p-hat vanishes on it";
  fail(ErrorKind::Precondition, msg + " (pass allow_prenorm to evaluate anyway)");
}

}  // namespace

Rational hat_p(const QuotientSpace& qs, const QuotientClass& c, bool allow_prenorm) {
  if (!c.space().same_as(qs)) fail(ErrorKind::Precondition, "hat_p: class of a different quotient");
  require_prenorm_ok(qs, allow_prenorm);
  const CosetMinimum m = minimize_pl_over_coset(qs.norm(), c.rep(), qs.g());
  return m.value;
}

ExtReal quotient_qmetric(const QuotientSpace& qs, const QuotientClass& a, const QuotientClass& b,
                         bool allow_prenorm) {
  if (!a.space().same_as(qs) || !b.space().same_as(qs))
    fail(ErrorKind::Precondition, "quotient_qmetric: class of a different quotient");
  require_prenorm_ok(qs, allow_prenorm);
  const CosetMinimum m = minimize_pl_over_coset(qs.norm(), b.rep() - a.rep(), qs.g(), &qs.space());
  if (!m.feasible) return ExtReal::infinity();
  return ExtReal(m.value);
}

// ---------------------------------------------------------------------------

std::vector<Vec> diagonal_sequence(std::size_t count) {
  std::vector<Vec> seq;
  for (std::size_t n = 1; n <= count; ++n) {
    const Rational c = Rational(2) - Rational(1, static_cast<long>(n));
    seq.push_back({c, c});
  }
  return seq;
}

CauchyProfile cauchy_profile(const PLQuasiNorm& p, const ConeSpace& space, const std::vector<Vec>& seq) {
  const std::size_t n = seq.size();
  CauchyProfile profile{std::vector<ExtReal>(n + 1, ExtReal(0))};
  for (std::size_t i = n; i-- > 0;) {
    ExtReal row(0);
    for (std::size_t j = i + 1; j < n; ++j) row = max(row, sym_metric(p, space, seq[i], seq[j]));
    profile.tail[i] = max(row, profile.tail[i + 1]);
  }
  return profile;
}

CauchyReport check_cauchy(const CauchyProfile& profile, const Rational& eps) {
  CauchyReport report;
  const std::size_t n = profile.tail.size() - 1;
  if (n == 0) return report;
  for (std::size_t i = 0; i < std::max<std::size_t>(n / 2, 1); ++i) {
    if (profile.tail[i] < ExtReal(eps)) {
      report.cauchy = true;
      report.n0 = i + 1;
      report.tail_diameter = profile.tail[i].value();
      return report;
    }
  }
  return report;
}

CauchyReport check_cauchy(const PLQuasiNorm& p, const ConeSpace& space, const std::vector<Vec>& seq,
                          const Rational& eps) {
  return check_cauchy(cauchy_profile(p, space, seq), eps);
}

std::optional<std::pair<std::size_t, std::size_t>> check_domination(const QuotientSpace& qs,
                                                                    const std::vector<Vec>& seq,
                                                                    bool allow_prenorm) {
  std::vector<QuotientClass> classes;
  for (const auto& x : seq) classes.push_back(class_of(qs, x));
  auto dominated = [&](std::size_t i, std::size_t j) {
    return quotient_qmetric(qs, classes[i], classes[j], allow_prenorm) <=
           qmetric(qs.norm(), qs.space(), seq[i], seq[j]);
  };
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j : {i + 1, n - 1}) {
      if (!dominated(i, j)) return std::make_pair(i, j);
      if (!dominated(j, i)) return std::make_pair(j, i);
    }
  }
  return std::nullopt;
}

}  // namespace qnc
