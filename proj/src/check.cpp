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

#include "qnc/check.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "qnc/cspace.hpp"
#include "qnc/error.hpp"
#include "qnc/lp.hpp"
#include "qnc/oracle.hpp"

namespace qnc {

long Generator::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

bool Generator::coin(double p_true) { return std::bernoulli_distribution(p_true)(engine_); }

Rational Generator::rational(long max_abs, long max_den) {
  const long den = integer(1, max_den);
  Rational r(integer(-max_abs * den, max_abs * den), den);
  r.canonicalize();
  return r;
}

Rational Generator::positive_rational(long max_abs, long max_den) {
  const long den = integer(1, max_den);
  Rational r(integer(1, max_abs * den), den);
  r.canonicalize();
  return r;
}

Vec Generator::vec(std::size_t n, long max_abs) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(integer(-max_abs, max_abs));
  return v;
}

ConeSpace Generator::cone(std::size_t dim, bool allow_strict) {
  switch (integer(0, allow_strict ? 4 : 3)) {
    case 0: return ConeSpace::full(dim);
    case 1: return ConeSpace::orthant(dim);
    case 2: {
      Matrix a;
      const long k = integer(1, static_cast<long>(dim));
      for (long i = 0; i < k; ++i) a.push_back(vec(dim, 2));
      return ConeSpace::polyhedral(std::move(a), dim);
    }
    case 3: {
      // a halfspace or wedge with a nontrivial lineality space
      Matrix a;
      const long k = dim > 1 ? integer(1, static_cast<long>(dim) - 1) : 1;
      for (long i = 0; i < k; ++i) a.push_back(vec(dim, 2));
      return ConeSpace::polyhedral(std::move(a), dim);
    }
    default: return ConeSpace::strict_first_orthant(dim);
  }
}

PLQuasiNorm Generator::norm_for(const ConeSpace& space) {
  const std::size_t n = space.dim();
  for (int attempt = 0; attempt < 200; ++attempt) {
    const std::size_t k = n + static_cast<std::size_t>(integer(0, 1));
    Matrix m;
    Vec wp, wm;
    for (std::size_t i = 0; i < k; ++i) {
      m.push_back(vec(n, 2));
      wp.emplace_back(integer(0, 2));
      wm.emplace_back(integer(0, 2));
    }
    PLQuasiNorm p(std::move(m), std::move(wp), std::move(wm), n);
    if (validate_qnorm(p, space)) return p;
  }
  return coercive_norm(n, 2);
}

PLQuasiNorm Generator::coercive_norm(std::size_t dim, long wmax) {
  Vec wp, wm;
  for (std::size_t i = 0; i < dim; ++i) {
    wp.emplace_back(integer(1, wmax));
    wm.emplace_back(integer(1, wmax));
  }
  return PLQuasiNorm(std::move(wp), std::move(wm));
}

Vec Generator::member_of(const ConeSpace& space, long max_coeff) {
  const ConeGenerators gens = cone_generators(space.closure_constraints(), space.dim());
  Vec x = zeros(space.dim());
  for (const auto& r : gens.rays) x = x + Rational(integer(0, max_coeff)) * r;
  for (const auto& l : gens.lineality) x = x + Rational(integer(-max_coeff, max_coeff)) * l;
  if (space.is_strict() && !is_zero(x) && sgn(x[0]) == 0) x[0] = 1;
  return x;
}

ConeSpace Generator::subcone_of(const ConeSpace& space) {
  const std::size_t n = space.dim();
  if (space.is_strict()) {
    if (coin()) return space;
    return ConeSpace::polyhedral(stack(identity(n), Matrix(1, Vec(n, Rational(-1)))), n);
  }
  const Subspace lin = lineality(space);
  std::vector<Vec> span;
  const long r = integer(0, static_cast<long>(lin.dim()));
  for (long i = 0; i < r; ++i) {
    Vec v = zeros(n);
    for (const auto& b : lin.basis()) v = v + Rational(integer(-2, 2)) * b;
    span.push_back(v);
  }
  const Subspace g(span, n);
  Matrix rows = space.closure_constraints();
  const std::vector<Vec> h = g.annihilator();
  rows.insert(rows.end(), h.begin(), h.end());
  if (!h.empty() && coin()) {
    Vec extra = zeros(n);
    for (const auto& row : h) extra = extra + Rational(integer(-2, 2)) * row;
    rows.push_back(extra);
  }
  return ConeSpace::polyhedral(std::move(rows), n);
}

Matrix Generator::map_between(const ConeSpace& source, const ConeSpace& target, long max_abs) {
  const bool nonneg = target.kind() == ConeKind::Orthant || target.is_strict();
  for (int attempt = 0; attempt < 200; ++attempt) {
    Matrix m;
    for (std::size_t i = 0; i < target.dim(); ++i) {
      Vec row;
      for (std::size_t j = 0; j < source.dim(); ++j) row.emplace_back(integer(nonneg ? 0 : -max_abs, max_abs));
      m.push_back(std::move(row));
    }
    if (maps_into(m, source, target)) return m;
  }
  return zero_matrix(target.dim(), source.dim());
}

// ---------------------------------------------------------------------------

namespace {

using Outcome = std::optional<std::string>;
using Property = std::function<Outcome(Generator&)>;

std::string str(const ExtReal& e) { return to_string(e); }
std::string str(const Rational& r) { return to_string(r); }
std::string str(const Vec& v) { return to_string(v); }

template <class... T>
std::string msg(const T&... parts) {
  std::ostringstream os;
  ((os << parts), ...);
  return os.str();
}

std::size_t small_dim(Generator& g, long hi = 3) { return static_cast<std::size_t>(g.integer(1, hi)); }

ExtReal times(const ExtReal& a, const ExtReal& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtReal::infinity();
  return ExtReal(a.value() * b.value());
}

struct QuotientCase {
  ConeSpace x;
  PLQuasiNorm p;
  QuotientSpace qs;
};

QuotientCase random_quotient(Generator& g, bool require_closed, bool allow_strict = true) {
  for (int attempt = 0;; ++attempt) {
    const std::size_t n = small_dim(g);
    ConeSpace x = g.cone(n, allow_strict);
    PLQuasiNorm p = g.norm_for(x);
    QuotientSpace qs = build_quotient(x, p, g.subcone_of(x));
    if (!require_closed || qs.certified_closed() || attempt > 50) return {x, p, qs};
  }
}

NormedCone random_normed(Generator& g, std::size_t n, bool coercive, bool allow_strict = false) {
  ConeSpace s = g.cone(n, allow_strict);
  PLQuasiNorm p = coercive ? g.coercive_norm(n, 3) : g.norm_for(s);
  return {s, p};
}

LinMap random_map(Generator& g, bool coercive_source) {
  const NormedCone a = random_normed(g, small_dim(g), coercive_source, true);
  const NormedCone b = random_normed(g, small_dim(g), false);
  return LinMap(g.map_between(a.space, b.space), a, b);
}

Vec scaled_down(const Vec& x, long k) { return Rational(1, k) * x; }

// -- cones --------------------------------------------------------------------

Outcome cone_closure(Generator& g) {
  const ConeSpace x = g.cone(small_dim(g, 4));
  const Vec a = g.member_of(x), b = g.member_of(x);
  const Rational r = g.positive_rational(5) * Rational(g.integer(0, 1));
  if (!member(x, a + b)) return msg("x+y left the cone: ", str(a), " + ", str(b));
  if (!member(x, r * a)) return msg("r*x left the cone: r=", str(r), " x=", str(a));
  if (!member(x, zeros(x.dim()))) return "zero is not a member";
  return std::nullopt;
}

Outcome lineality_soundness(Generator& g) {
  const ConeSpace x = g.cone(small_dim(g, 4));
  const Subspace l = lineality(x);
  for (const auto& b : l.basis())
    if (!member(x, b) || !member(x, -b)) return msg("lineality vector ", str(b), " not two-sided");
  const Vec v = g.member_of(x);
  if (!l.contains(v) && member(x, -v)) return msg(str(v), " outside L but -v is a member");
  return std::nullopt;
}

Outcome cancellation(Generator& g) {
  const std::size_t n = small_dim(g, 4);
  const Vec x = g.vec(n, 3), z = g.vec(n, 3);
  const Vec y = g.coin() ? x : g.vec(n, 3);
  if ((z + x == z + y) != (x == y)) return "z+x = z+y without x = y";
  return std::nullopt;
}

// -- quasi-norms and d_p -------------------------------------------------------

Outcome qnorm_axioms(Generator& g) {
  const ConeSpace x = g.cone(small_dim(g));
  const PLQuasiNorm p = g.norm_for(x);
  const Vec a = g.vec(x.dim(), 4), b = g.vec(x.dim(), 4);
  const Rational r = g.positive_rational(4) * Rational(g.integer(0, 1));
  if (p(zeros(x.dim())) != 0) return "p(0) != 0";
  if (p(r * a) != r * p(a)) return msg("p(rx) != r p(x) at r=", str(r), " x=", str(a));
  if (p(a + b) > p(a) + p(b)) return msg("subadditivity fails at ", str(a), ", ", str(b));
  Rational best = 0;
  bool first = true;
  for (const auto& piece : p.linear_pieces())
    if (first || dot(piece, a) > best) {
      best = dot(piece, a);
      first = false;
    }
  if (best != p(a)) return msg("max of linear pieces ", str(best), " != p(x) ", str(p(a)));
  return std::nullopt;
}

struct Triple {
  ConeSpace x;
  PLQuasiNorm p;
  Vec a, b, c;
};

Triple random_triple(Generator& g) {
  const ConeSpace x = g.cone(small_dim(g));
  Triple t{x, g.norm_for(x), g.member_of(x), {}, {}};
  t.b = g.coin() ? t.a + g.member_of(x) : g.member_of(x);
  t.c = g.coin() ? t.b + g.member_of(x) : g.member_of(x);
  return t;
}

Outcome qmetric_invariance(Generator& g) {
  const Triple t = random_triple(g);
  const Rational r = g.positive_rational(4);
  const ExtReal d = qmetric(t.p, t.x, t.a, t.b);
  const ExtReal shifted = qmetric(t.p, t.x, t.a + t.c, t.b + t.c);
  if (shifted != d) return msg("translation changed d: ", str(d), " vs ", str(shifted));
  const ExtReal scaled = qmetric(t.p, t.x, r * t.a, r * t.b);
  if (scaled != r * d) return msg("d(rx,ry) = ", str(scaled), " but r d(x,y) = ", str(r * d));
  return std::nullopt;
}

Outcome qmetric_triangle(Generator& g) {
  const Triple t = random_triple(g);
  const ExtReal lhs = qmetric(t.p, t.x, t.a, t.c);
  const ExtReal rhs = qmetric(t.p, t.x, t.a, t.b) + qmetric(t.p, t.x, t.b, t.c);
  if (lhs > rhs) return msg("triangle fails: ", str(lhs), " > ", str(rhs));
  return std::nullopt;
}

Outcome qmetric_self_zero(Generator& g) {
  const Triple t = random_triple(g);
  if (qmetric(t.p, t.x, t.a, t.a) != ExtReal(0)) return "d(x,x) != 0";
  if (sym_metric(t.p, t.x, t.a, t.a) != ExtReal(0)) return "d^s(x,x) != 0";
  return std::nullopt;
}

Outcome ball_identity(Generator& g) {
  const ConeSpace x = g.cone(small_dim(g));
  const PLQuasiNorm p = g.norm_for(x);
  const Vec c = g.member_of(x);
  const Rational r = g.positive_rational(3), eps = g.positive_rational(3);
  const Vec y = g.coin() ? r * c + scaled_down(g.member_of(x), g.integer(1, 4)) : g.member_of(x);
  // y in r B(c, eps)  <=>  y / r in B(c, eps)
  const bool lhs = ball_member(p, x, c, eps, (1 / r) * y, false);
  const Vec w = y - r * c;
  const bool rhs = member(x, w) && p(w) < r * eps;
  if (lhs != rhs) return msg("ball identity fails for y=", str(y), " r=", str(r), " eps=", str(eps));
  return std::nullopt;
}

// -- lp kernel -------------------------------------------------------------------

Outcome coset_lp_matches_eval(Generator& g) {
  const std::size_t n = small_dim(g, 4);
  const PLQuasiNorm p = g.norm_for(ConeSpace::full(n));
  const Vec x(g.vec(n, 10));
  const CosetMinimum m = minimize_pl_over_coset(p, x, Subspace::zero(n));
  if (!m.feasible || m.value != p(x)) return msg("epigraph LP gives ", str(m.value), " but p(x) = ", str(p(x)));
  return std::nullopt;
}

Outcome coset_lp_determinism(Generator& g) {
  const std::size_t n = small_dim(g, 4);
  const PLQuasiNorm p = g.norm_for(ConeSpace::full(n));
  const Vec x0 = g.vec(n, 10);
  const Subspace l({g.vec(n, 3)}, n);
  const CosetMinimum first = minimize_pl_over_coset(p, x0, l);
  minimize_pl_over_coset(p, x0 + g.vec(n, 2), l);
  const CosetMinimum again = minimize_pl_over_coset(p, x0, l);
  if (first.value != again.value || first.point != again.point) return "re-solving changed the result";
  return std::nullopt;
}

Rational l1(const Vec& v) {
  Rational s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

Rational ceil_of(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Outcome lp_vs_grid_inf(Generator& g) {
  const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
  const long wmax = 3;
  const PLQuasiNorm p = g.coercive_norm(n, wmax);
  const Vec x0 = g.vec(n, 5);
  const std::size_t m = g.coin(0.7) ? 1 : 2;
  std::vector<Vec> basis;
  if (m == 1) {
    Vec b = g.vec(n, 3);
    if (is_zero(b)) b[0] = 1;
    basis.push_back(b);
  } else {
    // disjoint supports keep each coefficient bounded separately
    const std::size_t split = static_cast<std::size_t>(g.integer(1, static_cast<long>(n) - 1));
    Vec b1 = zeros(n), b2 = zeros(n);
    for (std::size_t i = 0; i < n; ++i) (i < split ? b1 : b2)[i] = g.integer(-3, 3);
    if (is_zero(b1)) b1[0] = 1;
    if (is_zero(b2)) b2[n - 1] = 1;
    basis = {b1, b2};
  }
  // any minimiser has |t_i| ||b_i||_1 <= (wmax + 1) ||x0||_1
  Rational range = 1;
  for (const auto& b : basis) {
    const Rational bound = ceil_of(Rational(wmax + 1) * l1(x0) / l1(b));
    if (bound > range) range = bound;
  }
  const long per_axis = m == 1 ? 800 : 60;
  Rational step = ceil_of(2 * range * 100 / per_axis) / 100;
  if (sgn(step) == 0) step = Rational(1, 100);

  const Subspace l(basis, n);
  const CosetMinimum exact = minimize_pl_over_coset(p, x0, Subspace(basis, n));
  const Rational grid = grid_inf(p, x0, basis, range, step);
  Rational lip = 0;  // sup-norm Lipschitz constant of t -> p(x0 + B t)
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    for (const auto& b : basis) row += abs(b[i]);
    lip += (p.wplus()[i] > p.wminus()[i] ? p.wplus()[i] : p.wminus()[i]) * row;
  }
  if (exact.value > grid) return msg("LP ", str(exact.value), " above grid ", str(grid));
  if (grid - exact.value > step * lip)
    return msg("grid ", str(grid), " exceeds LP ", str(exact.value), " by more than step*L = ", str(step * lip));
  (void)l;
  return std::nullopt;
}

Outcome opnorm_vs_grid_sup(Generator& g) {
  const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
  const long wmax = 2;
  const ConeSpace x = g.coin() ? ConeSpace::full(n) : ConeSpace::orthant(n);
  const PLQuasiNorm p = g.coercive_norm(n, wmax);
  const std::size_t m = small_dim(g);
  const ConeSpace y = ConeSpace::full(m);
  const LinMap f(g.map_between(x, y), {x, p}, {y, g.norm_for(y)});
  const long k = n == 3 ? 8 : 20;
  const Rational step(1, k);
  const ExtReal exact = op_norm(f);
  if (exact.is_infinite()) return "op_norm infinite on a bounded unit ball";
  const Rational grid = grid_sup_opnorm(f, 1, step);
  const Rational lip = f.target().norm.compose(f.matrix(), n).lipschitz_sup();
  const Rational slack = step / 2 * (Rational(static_cast<long>(n) * wmax) * exact.value() + lip);
  if (grid > exact.value()) return msg("grid ", str(grid), " above LP ", str(exact));
  if (exact.value() - grid > slack) return msg("LP ", str(exact), " exceeds grid ", str(grid), " by more than ", str(slack));
  return std::nullopt;
}

// -- quotient ------------------------------------------------------------------

Outcome hatp_subadditive_homogeneous(Generator& g) {
  const QuotientCase q = random_quotient(g, false);
  const QuotientClass a = class_of(q.qs, g.member_of(q.x)), b = class_of(q.qs, g.member_of(q.x));
  const Rational lambda = g.coin(0.2) ? Rational(0) : g.positive_rational(4);
  const Rational pa = hat_p(q.qs, a, true), pb = hat_p(q.qs, b, true);
  if (hat_p(q.qs, class_add(a, b), true) > pa + pb) return "p-hat not subadditive";
  if (hat_p(q.qs, class_scale(lambda, a), true) != lambda * pa) return msg("p-hat not homogeneous at ", str(lambda));
  return std::nullopt;
}

Outcome quotient_domination(Generator& g) {
  const QuotientCase q = random_quotient(g, false);
  const Vec x = g.member_of(q.x);
  const Vec y = g.coin() ? x + g.member_of(q.x) : g.member_of(q.x);
  const ExtReal dq = quotient_qmetric(q.qs, class_of(q.qs, x), class_of(q.qs, y), true);
  const ExtReal d = qmetric(q.p, q.x, x, y);
  if (dq > d) return msg("d_phat = ", str(dq), " > d_p = ", str(d));
  return std::nullopt;
}

Outcome phi_contraction(Generator& g) {
  const QuotientCase q = random_quotient(g, false);
  const Vec x = g.member_of(q.x);
  if (hat_p(q.qs, class_of(q.qs, x), true) > q.p(x)) return msg("p-hat([x]) > p(x) at ", str(x));
  const ExtReal phi = phi_norm(q.qs);
  if (phi > ExtReal(1)) return msg("||phi|| = ", str(phi), " > 1");
  return std::nullopt;
}

Outcome class_well_defined(Generator& g) {
  const QuotientCase q = random_quotient(g, false);
  const Vec x = g.member_of(q.x);
  Vec gv = zeros(q.x.dim());
  for (const auto& b : q.qs.g().basis()) gv = gv + Rational(g.integer(-3, 3)) * b;
  if (!(class_of(q.qs, x + gv) == class_of(q.qs, x))) return "class_of(x+g) != class_of(x)";
  if (hat_p(q.qs, class_of(q.qs, x + gv), true) != hat_p(q.qs, class_of(q.qs, x), true)) return "p-hat changed";
  const QuotientClass a = class_of(q.qs, x);
  const QuotientClass zero = class_of(q.qs, zeros(q.x.dim()));
  if (!(class_add(a, zero) == a) || !(class_scale(0, a) == zero)) return "neutral element laws fail";
  return std::nullopt;
}

Outcome falsified_witness(Generator& g) {
  // two-dimensional instances with a diagonal or axis line make non-closed
  // subspaces common
  const ConeSpace x = ConeSpace::full(2);
  const PLQuasiNorm p = g.norm_for(x);
  const Vec dir = g.coin() ? Vec{1, 1} : g.vec(2, 2);
  const Vec d = is_zero(dir) ? Vec{1, 0} : dir;
  const Vec normal{-d[1], d[0]};
  const QuotientSpace qs = build_quotient(x, p, ConeSpace::polyhedral({normal, -normal}, 2));
  const auto* f = std::get_if<Falsified>(&qs.certificate());
  if (!f) return std::nullopt;
  const Vec& w = f->witness;
  if (qs.g().contains(w)) return "witness lies in G";
  if (dist_to_subspace(p, x, w, qs.g(), Direction::FromX) != ExtReal(0)) return "witness has positive distance";
  if (hat_p(qs, class_of(qs, -w), true) != 0) return "p-hat([-w]) != 0";
  if (class_of(qs, w) == class_of(qs, zeros(2))) return "[w] = [0]";
  return std::nullopt;
}

Outcome inverse_classes(Generator& g) {
  const QuotientCase q = random_quotient(g, false);
  const Subspace lin = lineality(q.x);
  Vec x = zeros(q.x.dim());
  for (const auto& b : lin.basis()) x = x + Rational(g.integer(-3, 3)) * b;
  Vec gv = zeros(q.x.dim());
  for (const auto& b : q.qs.g().basis()) gv = gv + Rational(g.integer(-3, 3)) * b;
  const Vec y = g.coin(0.7) ? -x + gv : g.member_of(q.x);
  const QuotientClass a = class_of(q.qs, x), b = class_of(q.qs, y);
  if (class_add(a, b) == class_of(q.qs, zeros(q.x.dim())) && !(q.qs.g().reduce(-a.rep()) == b.rep()))
    return "[x] + [y] = [0] but -x is not in [y]";
  return std::nullopt;
}

// -- operators -----------------------------------------------------------------

Outcome norm_inequality(Generator& g) {
  const LinMap f = random_map(g, g.coin());
  const ExtReal norm = f.norm();
  if (norm.is_infinite()) return std::nullopt;
  const Vec x = g.member_of(f.source().space);
  const Rational lhs = f.target().norm(f(x));
  if (lhs > norm.value() * f.source().norm(x)) return msg("q(f(x)) > ||f|| p(x) at ", str(x));
  return std::nullopt;
}

Outcome submultiplicativity(Generator& g) {
  const NormedCone a = random_normed(g, small_dim(g), true, true);
  const NormedCone b = random_normed(g, small_dim(g), g.coin());
  const NormedCone c = random_normed(g, small_dim(g), false);
  const LinMap f(g.map_between(a.space, b.space), a, b);
  const LinMap h(g.map_between(b.space, c.space), b, c);
  const ExtReal lhs = compose(h, f).norm();
  const ExtReal rhs = times(h.norm(), f.norm());
  if (lhs > rhs) return msg("||g o f|| = ", str(lhs), " > ", str(rhs));
  return std::nullopt;
}

Outcome ball_scaling(Generator& g) {
  const LinMap f = random_map(g, g.coin());
  const Vec y = g.coin() ? f(g.member_of(f.source().space)) : g.vec(f.dim_out(), 3);
  const Rational r = g.positive_rational(3), s = g.positive_rational(3);
  const ExtReal m = fiber_min(f, y);
  const ExtReal ms = fiber_min(f, (s / r) * y);
  if (ms != (s / r) * m) return "fiber minimum is not homogeneous";
  if ((m < ExtReal(r)) != (ms < ExtReal(s))) return msg("y in f(B(0,r)) disagrees with (s/r)y in f(B(0,s))");
  return std::nullopt;
}

Outcome vanishing_on_ball(Generator& g) {
  const NormedCone a = random_normed(g, small_dim(g, 4), false, true);
  const ConeGenerators gens = cone_generators(a.space.closure_constraints(), a.space.dim());
  std::vector<Vec> ball;
  auto add = [&](const Vec& v) {
    const Rational pv = a.norm(v);
    ball.push_back(sgn(pv) > 0 ? (1 / pv) * v : v);
  };
  for (const auto& r : gens.rays) add(r);
  for (const auto& l : gens.lineality) {
    add(l);
    add(-l);
  }
  const std::vector<Vec> annihilating = null_space(ball, a.space.dim());
  Vec h = g.vec(a.space.dim(), 2);
  if (!annihilating.empty() && g.coin()) h = annihilating.front();
  bool vanishes = true;
  for (const auto& v : ball) vanishes = vanishes && sgn(dot(h, v)) == 0;
  if (!vanishes) return std::nullopt;
  for (int i = 0; i < 5; ++i)
    if (sgn(dot(h, g.member_of(a.space))) != 0) return "functional vanishes on the unit ball but not on X";
  return std::nullopt;
}

Outcome continuity_consistency(Generator& g) {
  const LinMap f = random_map(g, g.coin(0.3));
  const ExtReal direct = op_norm(f);
  const PLQuasiNorm qf = f.target().norm.compose(f.matrix(), f.dim_in());
  const ExtReal rays = sup_ratio(f.source().space.closure_constraints(), f.source().norm,
                                 [&](const Vec& x) { return ExtReal(qf(x)); });
  if (direct != rays) return msg("op_norm ", str(direct), " but ray enumeration gives ", str(rays));
  if (is_continuous(f) != direct.is_finite()) return "is_continuous disagrees with op_norm";
  return std::nullopt;
}

Outcome lower_bound_trivial_kernel(Generator& g) {
  const std::size_t n = small_dim(g), m = small_dim(g);
  const NormedCone a{ConeSpace::full(n), g.norm_for(ConeSpace::full(n))};
  const NormedCone b{ConeSpace::full(m), g.norm_for(ConeSpace::full(m))};
  const LinMap f(g.map_between(a.space, b.space), a, b);
  const Rational k = lower_bound_constant(f);
  if (sgn(k) > 0 && !null_space(f.matrix(), n).empty()) return "k > 0 with a nontrivial kernel";
  return std::nullopt;
}

Outcome finjective_constants(Generator& g) {
  const LinMap f = random_map(g, g.coin());
  const Rational k = lower_bound_constant(f);
  const ExtReal c = inverse_bound_constant(f);
  if (sgn(k) == 0) {
    if (c.is_finite() && sgn(c.value()) > 0) return msg("k = 0 but c = ", str(c));
    return std::nullopt;
  }
  if (c != ExtReal(Rational(1 / k))) return msg("c = ", str(c), " but 1/k = ", str(Rational(1 / k)));
  return std::nullopt;
}

Outcome dual_isometry(Generator& g) {
  const QuotientCase q = random_quotient(g, true, false);
  if (!q.qs.certified_closed()) return std::nullopt;
  const QuotientDualIso iso(q.qs);
  const NormedCone source{q.x, q.p};
  // a continuous element of the polar, plus sometimes an arbitrary functional
  Vec h = zeros(q.x.dim());
  for (const auto& d : polar(q.qs)) h = h + Rational(g.integer(0, 2)) * d.functional;
  Vec f = iso.to_quotient_dual(h);
  if (g.coin(0.25)) f = g.vec(q.qs.quotient_dim(), 2);
  const Vec tf = iso.to_polar(f);
  const ExtReal lhs = functional_norm(source, tf);
  const ExtReal rhs = quotient_functional_norm(q.qs, f);
  if (lhs != rhs) return msg("||Tf|| = ", str(lhs), " but ||f|| = ", str(rhs), " for f=", str(f));
  if (iso.to_quotient_dual(tf) != f) return "T_inv(T f) != f";
  if (iso.to_polar(iso.to_quotient_dual(h)) != h) return "T(T_inv h) != h";
  if (is_zero(tf) != is_zero(f)) return "T is not injective";
  return std::nullopt;
}

Outcome factorization_norms(Generator& g) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
    const std::size_t m = static_cast<std::size_t>(g.integer(1, static_cast<long>(n) - 1));
    const NormedCone a = random_normed(g, n, g.coin(0.3));
    const NormedCone b{ConeSpace::full(m), g.norm_for(ConeSpace::full(m))};
    const Matrix t = g.map_between(a.space, b.space);
    if (rank(t, n) < m) continue;
    const LinMap f(t, a, b);
    if (!kernel_quotient(f).certified_closed()) continue;
    const Factorization fz = factorize(f);
    if (fz.norm_t != fz.norm_t_tilde)
      return msg("||T|| = ", str(fz.norm_t), " but ||T~|| = ", str(fz.norm_t_tilde));
    for (int i = 0; i < 3; ++i) {
      const Vec x = g.member_of(a.space);
      if (fz.t_tilde * class_coordinates(class_of(fz.qs, x)) != f(x)) return "T~ o phi != T";
    }
    return std::nullopt;
  }
  return std::nullopt;
}

// -- complexity space -------------------------------------------------------------

ComplexityFunction random_cost(Generator& g, std::size_t n) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(abs(g.rational(8)));
  return ComplexityFunction(v);
}

Outcome cstar_quasi_metric(Generator& g) {
  const std::size_t n = small_dim(g, 8);
  const ComplexityFunction a = random_cost(g, n), b = g.coin(0.2) ? a : random_cost(g, n), c = random_cost(g, n);
  if (cstar_qmetric(a, a) != 0) return "d(f,f) != 0";
  if (cstar_qmetric(a, c) > cstar_qmetric(a, b) + cstar_qmetric(b, c)) return "triangle fails";
  if (cstar_qmetric(a, b) == 0 && cstar_qmetric(b, a) == 0 && !(a == b)) return "d(f,g) = d(g,f) = 0 with f != g";
  return std::nullopt;
}

Outcome cstar_ep_matches_qmetric(Generator& g) {
  const std::size_t n = small_dim(g, 8);
  const ComplexityFunction a = random_cost(g, n);
  const ComplexityFunction b = g.coin() ? ComplexityFunction(a.values() + random_cost(g, n).values()) : random_cost(g, n);
  const NormedCone c = cstar_cone(n);
  if (qmetric(c.norm, c.space, a.values(), b.values()) != cstar_ep(a, b)) return "e_p disagrees with d_p";
  return std::nullopt;
}

Outcome cstar_f_isometry(Generator& g) {
  const std::size_t n = static_cast<std::size_t>(g.integer(2, 8));
  Vec v = random_cost(g, n).values();
  v[0] = g.positive_rational(8);
  const ComplexityFunction f(v);
  if (cstar_norm(apply_f(f)) != f[0]) return "p(F(f)) != f(0)";
  Vec w = v;
  w[n - 1] += 1;
  const ComplexityFunction h(w);
  if (!(apply_f(f) == apply_f(h)) || f == h) return "non-injectivity pair broken";
  const LinMap fm = truncated_f(n);
  if (fm.target().norm(fm(v)) != fm.source().norm(v)) return "truncated map is not an isometry";
  return std::nullopt;
}

const std::vector<std::pair<std::string, Property>>& registry() {
  static const std::vector<std::pair<std::string, Property>> props = {
      {"cone_closure", cone_closure},
      {"lineality_soundness", lineality_soundness},
      {"cancellation", cancellation},
      {"qnorm_axioms", qnorm_axioms},
      {"qmetric_invariance", qmetric_invariance},
      {"qmetric_triangle", qmetric_triangle},
      {"qmetric_self_zero", qmetric_self_zero},
      {"ball_identity", ball_identity},
      {"coset_lp_matches_eval", coset_lp_matches_eval},
      {"coset_lp_determinism", coset_lp_determinism},
      {"lp_vs_grid_inf", lp_vs_grid_inf},
      {"opnorm_vs_grid_sup", opnorm_vs_grid_sup},
      {"hatp_subadditive_homogeneous", hatp_subadditive_homogeneous},
      {"quotient_domination", quotient_domination},
      {"phi_contraction", phi_contraction},
      {"class_well_defined", class_well_defined},
      {"falsified_witness", falsified_witness},
      {"inverse_classes", inverse_classes},
      {"norm_inequality", norm_inequality},
      {"submultiplicativity", submultiplicativity},
      {"ball_scaling", ball_scaling},
      {"vanishing_on_ball", vanishing_on_ball},
      {"continuity_consistency", continuity_consistency},
      {"lower_bound_trivial_kernel", lower_bound_trivial_kernel},
      {"finjective_constants", finjective_constants},
      {"dual_isometry", dual_isometry},
      {"factorization_norms", factorization_norms},
      {"cstar_quasi_metric", cstar_quasi_metric},
      {"cstar_ep_matches_qmetric", cstar_ep_matches_qmetric},
      {"cstar_f_isometry", cstar_f_isometry},
  };
  return props;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& [name, prop] : registry()) names.push_back(name);
  return names;
}

PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t cases) {
  const Property* prop = nullptr;
  for (const auto& [n, p] : registry())
    if (n == name) prop = &p;
  if (!prop) fail(ErrorKind::Precondition, "unknown property " + name);

  PropertyResult result{name, cases, 0, "", 0};
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < cases; ++i) {
    std::seed_seq seq{seed, fnv1a(name), static_cast<std::uint64_t>(i)};
    std::mt19937_64 engine(seq);
    Generator g(engine());
    Outcome out;
    try {
      out = (*prop)(g);
    } catch (const std::exception& e) {
      out = std::string("exception: ") + e.what();
    }
    if (out) {
      if (result.failures == 0) result.first_failure = "case " + std::to_string(i) + ": " + *out;
      ++result.failures;
    }
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases) {
  std::vector<PropertyResult> out;
  for (const auto& name : property_names()) out.push_back(run_property(name, seed, cases));
  return out;
}

}  // namespace qnc
