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

// One line per acceptance criterion: PASS/FAIL, timing, and a short detail.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "qnc/check.hpp"
#include "qnc/cspace.hpp"
#include "qnc/error.hpp"
#include "qnc/operators.hpp"
#include "qnc/quotient.hpp"

using namespace qnc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Vec vec2(const Rational& a, const Rational& b) { return {a, b}; }

const ConeSpace kPlane = ConeSpace::full(2);
const PLQuasiNorm kUpperSum = PLQuasiNorm::upper(2);
const ConeSpace kDiagonal = ConeSpace::polyhedral({{1, -1}, {-1, 1}}, 2);

Outcome diagonal_quotient() {
  std::ostringstream d;
  bool ok = true;
  for (long n = 1; n <= 3; ++n) {
    const Rational c = Rational(2) - Rational(1, n);
    const ExtReal dist = qmetric(kUpperSum, kPlane, vec2(2, 3), vec2(c, c));
    ok = ok && dist == ExtReal(0);
    d << "d((2,3),x_" << n << ")=" << dist << " ";
  }
  const QuotientSpace qs = build_quotient(kPlane, kUpperSum, kDiagonal);
  const auto* f = std::get_if<Falsified>(&qs.certificate());
  if (!f) return {false, d.str() + "certificate " + to_string(qs.certificate())};
  const bool witness_ok = member(kPlane, f->witness) && !qs.g().contains(f->witness) &&
                          dist_to_subspace(kUpperSum, kPlane, f->witness, qs.g(), Direction::FromX) == ExtReal(0);
  const Rational a = hat_p(qs, class_of(qs, vec2(2, -3)), true);
  const Rational b = hat_p(qs, class_of(qs, vec2(-2, 3)), true);
  const bool distinct = !(class_of(qs, vec2(2, -3)) == class_of(qs, vec2(0, 0)));
  d << "witness=" << to_string(f->witness) << (witness_ok ? " verified" : " INVALID") << "; p-hat[(2,-3)]=" << a
    << " p-hat[(-2,3)]=" << b << (distinct ? ", [(2,-3)] != [0]" : ", [(2,-3)] = [0]");
  return {ok && witness_ok && a == 0 && b == 0 && distinct, d.str()};
}

Outcome halfspace_lineality() {
  const Subspace g = lineality(ConeSpace::polyhedral({{0, 1}}, 2));
  const bool ok = g.dim() == 1 && g.contains(vec2(1, 0)) && !g.contains(vec2(0, 1));
  return {ok, "basis " + (g.dim() ? to_string(g.basis()[0]) : std::string("{}"))};
}

Outcome complexity_isometry() {
  const std::size_t n = kDefaultTruncation;
  Generator g(2024);
  std::size_t checked = 0;
  for (; checked < 100; ++checked) {
    Vec values;
    values.push_back(g.positive_rational(10));
    for (std::size_t i = 1; i < n; ++i) values.push_back(abs(g.rational(10)));
    const ComplexityFunction f(values);
    if (cstar_norm(apply_f(f)) != f[0]) return {false, "p(F(f)) != f(0) for f=" + to_string(values)};
  }
  const LinMap fm = truncated_f(n);
  const InjectivityResult inj = is_G_injective(fm, kernel_quotient(fm));
  if (inj.yes || !inj.witness) return {false, "no non-injectivity witness"};
  const auto& [a, b] = *inj.witness;
  const bool ok = fm(a) == fm(b) && !(a == b);
  std::ostringstream d;
  d << checked << " random f with p(F(f)) = f(0); F(a) = F(b) for a=" << to_string(a) << ", b=" << to_string(b);
  return {ok, d.str()};
}

Outcome dual_isometry() {
  Generator g(4242);
  std::size_t instances = 0, attempts = 0;
  while (instances < 60 && attempts < 2000) {
    ++attempts;
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const ConeSpace x = g.cone(n, false);
    const PLQuasiNorm p = g.norm_for(x);
    const QuotientSpace qs = build_quotient(x, p, g.subcone_of(x));
    if (!qs.certified_closed()) continue;
    const QuotientDualIso iso(qs);
    Vec h = zeros(n);
    for (const auto& d : polar(qs)) h = h + Rational(g.integer(0, 3)) * d.functional;
    std::vector<Vec> fs = {iso.to_quotient_dual(h), g.vec(qs.quotient_dim(), 2)};
    for (const auto& f : fs) {
      const Vec tf = iso.to_polar(f);
      if (functional_norm({x, p}, tf) != quotient_functional_norm(qs, f))
        return {false, "norm mismatch for f=" + to_string(f)};
      if (iso.to_quotient_dual(tf) != f) return {false, "T_inv(T f) != f"};
    }
    if (iso.to_polar(iso.to_quotient_dual(h)) != h) return {false, "T(T_inv h) != h"};
    ++instances;
  }
  return {instances >= 50, std::to_string(instances) + " closed instances, 2 functionals each"};
}

Outcome factorization_norms() {
  Generator g(777);
  std::size_t instances = 0, attempts = 0;
  while (instances < 60 && attempts < 5000) {
    ++attempts;
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
    const std::size_t m = static_cast<std::size_t>(g.integer(1, static_cast<long>(n) - 1));
    const ConeSpace x = g.cone(n, false);
    const NormedCone source{x, g.coin(0.3) ? g.coercive_norm(n, 3) : g.norm_for(x)};
    const NormedCone target{ConeSpace::full(m), g.norm_for(ConeSpace::full(m))};
    const Matrix t = g.map_between(x, target.space);
    if (rank(t, n) < m) continue;
    const LinMap f(t, source, target);
    if (!kernel_quotient(f).certified_closed()) continue;
    const Factorization fz = factorize(f);
    if (fz.norm_t != fz.norm_t_tilde)
      return {false, "||T|| = " + to_string(fz.norm_t) + " but ||T~|| = " + to_string(fz.norm_t_tilde)};
    ++instances;
  }
  return {instances >= 50, std::to_string(instances) + " onto maps with closed kernel subspace"};
}

Outcome property_suites() {
  const char* names[] = {"qmetric_invariance", "qmetric_triangle", "hatp_subadditive_homogeneous",
                         "quotient_domination",  "phi_contraction",  "norm_inequality",
                         "submultiplicativity", "ball_scaling",    "vanishing_on_ball"};
  std::ostringstream d;
  bool ok = true;
  for (const char* name : names) {
    const PropertyResult r = run_property(name, 6, 100);
    ok = ok && r.passed();
    if (!r.passed()) d << name << " failed (" << r.first_failure << ") ";
  }
  if (ok) d << std::size(names) << " properties x 100 cases";
  return {ok, d.str()};
}

Outcome oracle_agreement() {
  const PropertyResult inf = run_property("lp_vs_grid_inf", 7, 100);
  const PropertyResult sup = run_property("opnorm_vs_grid_sup", 7, 100);
  std::ostringstream d;
  d << inf.cases << " coset infima and " << sup.cases << " operator norms inside the grid sandwich";
  if (!inf.passed()) d << "; inf: " << inf.first_failure;
  if (!sup.passed()) d << "; sup: " << sup.first_failure;
  return {inf.passed() && sup.passed(), d.str()};
}

Outcome cauchy_fixtures() {
  std::ostringstream d;
  bool ok = true;
  auto run = [&](const char* label, const QuotientSpace& qs, const std::vector<Vec>& seq, bool prenorm) {
    d << label << ":";
    const CauchyProfile profile = cauchy_profile(qs.norm(), qs.space(), seq);
    for (const Rational& eps : {Rational(1), Rational(1, 10), Rational(1, 100)}) {
      const CauchyReport r = check_cauchy(profile, eps);
      ok = ok && r.cauchy;
      d << " eps=" << eps << (r.cauchy ? " n0=" + std::to_string(r.n0) : std::string(" not Cauchy"));
    }
    const auto bad = check_domination(qs, seq, prenorm);
    ok = ok && !bad;
    d << (bad ? " domination FAILS" : " dominated") << "; ";
  };
  run("diagonal x_n", build_quotient(kPlane, kUpperSum, kDiagonal), diagonal_sequence(400), true);

  const QuotientSpace axis = build_quotient(kPlane, PLQuasiNorm({1, 1}, {0, 1}), ConeSpace::polyhedral({{0, 1}, {0, -1}}, 2));
  std::vector<Vec> seq;
  for (long n = 1; n <= 400; ++n) seq.push_back(vec2(Rational(3) + Rational(1, n), Rational(1) - Rational(1, n)));
  run("(3+1/n, 1-1/n) over the x-axis", axis, seq, false);
  return {ok, d.str()};
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "non-closed diagonal subspace under u+u", 1, diagonal_quotient},
      {2, "lineality of the upper halfspace", 1, halfspace_lineality},
      {3, "complexity-space first-value map", 1, complexity_isometry},
      {4, "dual of the quotient is isometric to the polar", 30, dual_isometry},
      {5, "factorisation through the kernel quotient keeps the norm", 30, factorization_norms},
      {6, "randomized property suites", 120, property_suites},
      {7, "LP values inside the grid-oracle sandwich", 120, oracle_agreement},
      {8, "Cauchy fixtures and quotient domination", 1, cauchy_fixtures},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.pass && in_time;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << std::fixed
              << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds << " s"
              << (in_time ? "" : ", TOO SLOW") << "] " << out.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
