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

#include "doctest.h"
#include "helpers.hpp"
#include "qnc/cspace.hpp"
#include "qnc/error.hpp"
#include "qnc/operators.hpp"

using namespace qnc;
using namespace qnc::test;

namespace {

const ConeSpace r2 = ConeSpace::full(2);
const PLQuasiNorm uu = PLQuasiNorm::upper(2);
const ConeSpace halfspace = ConeSpace::polyhedral(m({{0, 1}}), 2);
const ConeSpace x_axis = ConeSpace::polyhedral(m({{0, 1}, {0, -1}}), 2);
const PLQuasiNorm abs_y(m({{0, 1}}), v({1}), v({1}), 2);
const PLQuasiNorm upper_x_abs_y(v({1, 1}), v({0, 1}));
const NormedCone plane_uu{r2, uu};
const NormedCone line_u = upper_line();

LinMap project_x() { return LinMap(m({{1, 0}}), {r2, abs_y}, line_u); }
LinMap project_y_halfspace() {
  return LinMap(m({{0, 1}}), {halfspace, abs_y}, {ConeSpace::orthant(1), PLQuasiNorm(v({1}), v({0}))});
}

}  // namespace

TEST_CASE("maps must respect the cones") {
  CHECK_THROWS_AS(LinMap(m({{-1, 0}}), {ConeSpace::orthant(2), uu}, {ConeSpace::orthant(1), PLQuasiNorm::upper(1)}),
                  Error);
  CHECK_THROWS_AS(LinMap(m({{1, 0, 0}}), plane_uu, line_u), Error);
  CHECK(maps_into(m({{1, 0}, {0, 0}}), ConeSpace::strict_first_orthant(2), ConeSpace::strict_first_orthant(2)));
  CHECK_FALSE(maps_into(m({{0, 0}, {0, 1}}), ConeSpace::strict_first_orthant(2), ConeSpace::strict_first_orthant(2)));
}

TEST_CASE("operator norms") {
  CHECK(op_norm(LinMap(identity(2), plane_uu, plane_uu)) == ExtReal(1));
  CHECK(op_norm(LinMap(zero_matrix(2, 2), plane_uu, plane_uu)) == ExtReal(0));
  CHECK(op_norm(project_x()).is_infinite());
  CHECK_FALSE(is_continuous(project_x()));
  CHECK(op_norm(project_y_halfspace()) == ExtReal(1));
  const LinMap f = truncated_f(6);
  CHECK(is_continuous(f));
  CHECK(f.norm() == ExtReal(1));
}

TEST_CASE("the quotient map is a contraction of norm one") {
  const QuotientSpace qs = build_quotient(r2, upper_x_abs_y, x_axis);
  CHECK(phi_norm(qs) == ExtReal(1));
  const QuotientSpace uu_axis = build_quotient(r2, uu, x_axis);
  CHECK(phi_norm(uu_axis) == ExtReal(1));
}

TEST_CASE("composition") {
  const LinMap id(identity(2), plane_uu, plane_uu);
  const LinMap zero(zero_matrix(2, 2), plane_uu, plane_uu);
  const LinMap sum(m({{1, 1}}), plane_uu, line_u);
  CHECK(compose(sum, id).matrix() == sum.matrix());
  CHECK(compose(sum, id).norm() == sum.norm());
  CHECK(compose(sum, zero).norm() == ExtReal(0));
  CHECK_THROWS_AS(compose(id, sum), Error);
}

TEST_CASE("p-injectivity") {
  const InjectivityResult r = is_p_injective(project_x());
  REQUIRE_FALSE(r.yes);
  REQUIRE(r.witness.has_value());
  const auto& [a, b] = *r.witness;
  CHECK(project_x()(a) == project_x()(b));
  CHECK(abs_y(a) != abs_y(b));
  CHECK(is_p_injective(LinMap(identity(2), plane_uu, plane_uu)).yes);
  CHECK(is_p_injective(truncated_f(6)).yes);
}

TEST_CASE("G-injectivity") {
  const LinMap id(identity(2), plane_uu, plane_uu);
  CHECK(is_G_injective(id, kernel_quotient(id)).yes);
  const LinMap y(m({{0, 1}}), plane_uu, line_u);
  CHECK(is_G_injective(y, kernel_quotient(y)).yes);
  const LinMap f = truncated_f(6);
  // the kernel meets the cone only in zero, so G is trivial and the tail is lost
  const InjectivityResult g = is_G_injective(f, kernel_quotient(f));
  REQUIRE_FALSE(g.yes);
  const auto& [a, b] = *g.witness;
  CHECK(f(a) == f(b));
  CHECK_FALSE(a == b);
}

TEST_CASE("openness") {
  const Openness id = openness_constant(LinMap(identity(2), plane_uu, plane_uu));
  CHECK(id.open);
  CHECK(id.m == 1);
  const Openness px = openness_constant(project_x());
  CHECK(px.open);
  CHECK(px.m == 0);
  const Openness py = openness_constant(project_y_halfspace());
  CHECK(py.open);
  CHECK(py.m == 1);
  const Openness not_onto = openness_constant(LinMap(m({{1, 0}, {1, 0}}), plane_uu, plane_uu));
  CHECK_FALSE(not_onto.open);
}

TEST_CASE("functional norms and polar") {
  CHECK(functional_norm(plane_uu, v({-1, 0})).is_infinite());
  CHECK(functional_norm(plane_uu, v({1, 1})) == ExtReal(1));
  CHECK(functional_norm(plane_uu, v({0, 0})) == ExtReal(0));

  const auto whole = polar(build_quotient(r2, uu, r2));
  REQUIRE(whole.size() == 1);
  CHECK(is_zero(whole[0].functional));

  const auto trivial = polar(build_quotient(r2, uu, ConeSpace::polyhedral(m({{1, 0}, {0, 1}, {-1, -1}}), 2)));
  bool e1 = false, e2 = false;
  for (const auto& d : trivial) {
    CHECK(functional_norm(plane_uu, d.functional) == ExtReal(d.norm));
    e1 = e1 || d.functional == v({1, 0});
    e2 = e2 || d.functional == v({0, 1});
  }
  CHECK(e1);
  CHECK(e2);

  const auto axis = polar(build_quotient(r2, upper_x_abs_y, x_axis));
  for (const auto& d : axis) CHECK(d.functional[0] == 0);
}

TEST_CASE("dual isometry") {
  const QuotientSpace qs = build_quotient(r2, upper_x_abs_y, x_axis);
  const QuotientDualIso t(qs);
  CHECK(t.to_polar(v({1})) == v({0, 1}));
  CHECK(is_zero(t.to_polar(v({0}))));
  CHECK(functional_norm({r2, upper_x_abs_y}, t.to_polar(v({1}))) == quotient_functional_norm(qs, v({1})));
  CHECK(t.to_quotient_dual(v({0, 1})) == v({1}));
  CHECK_THROWS_AS(t.to_quotient_dual(v({1, 0})), Error);
  CHECK_THROWS_AS(QuotientDualIso(build_quotient(r2, uu, x_axis)), Error);
}

TEST_CASE("factorisation") {
  const Factorization f = factorize(project_y_halfspace());
  CHECK(f.qs.certified_closed());
  CHECK(f.qs.g().contains(v({1, 0})));
  CHECK(f.t_tilde == m({{1}}));
  CHECK(f.norm_t == ExtReal(1));
  CHECK(f.norm_t_tilde == ExtReal(1));

  // {0} is closed only when p vanishes nowhere off the origin
  const PLQuasiNorm l1(v({1, 1}), v({1, 1}));
  const Factorization inj = factorize(LinMap(identity(2), {r2, l1}, {r2, l1}));
  CHECK(inj.qs.g().dim() == 0);
  CHECK(inj.t_tilde == identity(2));
  CHECK_THROWS_AS(factorize(LinMap(identity(2), {r2, upper_x_abs_y}, {r2, upper_x_abs_y})), Error);

  CHECK_THROWS_AS(factorize(LinMap(m({{0, 1}}), plane_uu, line_u)), Error);
}

TEST_CASE("bounds from below") {
  const LinMap id(identity(2), plane_uu, plane_uu);
  CHECK(lower_bound_constant(id) == 1);
  CHECK(inverse_bound_constant(id) == ExtReal(1));
  const LinMap collapse(m({{1, 1}}), plane_uu, line_u);
  CHECK(lower_bound_constant(collapse) == 0);
  CHECK(inverse_bound_constant(collapse).is_infinite());
}

TEST_CASE("fiber minimum") {
  CHECK(fiber_min(project_y_halfspace(), v({3})) == ExtReal(3));
  CHECK(fiber_min(project_x(), v({-5})) == ExtReal(0));
  const LinMap diag(m({{1, 0}, {1, 0}}), plane_uu, plane_uu);
  CHECK(fiber_min(diag, v({1, 2})).is_infinite());
}

TEST_CASE("analysis report") {
  const AnalysisReport r = analyze(project_y_halfspace());
  CHECK(r.continuous);
  CHECK(r.norm == ExtReal(1));
  CHECK(r.p_injective.yes);
  CHECK(r.openness.open);
  REQUIRE(r.factorization.has_value());
  CHECK(r.factorization->norm_t == r.factorization->norm_t_tilde);
  const AnalysisReport bad = analyze(LinMap(m({{0, 1}}), plane_uu, line_u));
  CHECK_FALSE(bad.factorization.has_value());
  CHECK_FALSE(bad.factorization_error.empty());
}
