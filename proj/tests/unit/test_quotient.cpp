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
#include "qnc/error.hpp"
#include "qnc/quotient.hpp"

using namespace qnc;
using namespace qnc::test;

namespace {

const ConeSpace r2 = ConeSpace::full(2);
const PLQuasiNorm uu = PLQuasiNorm::upper(2);
const ConeSpace diagonal = ConeSpace::polyhedral(m({{1, -1}, {-1, 1}}), 2);
const ConeSpace halfspace = ConeSpace::polyhedral(m({{0, 1}}), 2);
const ConeSpace x_axis = ConeSpace::polyhedral(m({{0, 1}, {0, -1}}), 2);
const PLQuasiNorm upper_x_abs_y(v({1, 1}), v({0, 1}));

bool valid_witness(const QuotientSpace& qs, const Vec& w) {
  return member(qs.space(), w) && !qs.g().contains(w) &&
         dist_to_subspace(qs.norm(), qs.space(), w, qs.g(), Direction::FromX) == ExtReal(0);
}

}  // namespace

TEST_CASE("diagonal subspace under u+u is not closed") {
  const QuotientSpace qs = build_quotient(r2, uu, diagonal);
  CHECK(qs.g().contains(v({1, 1})));
  const auto* f = std::get_if<Falsified>(&qs.certificate());
  REQUIRE(f != nullptr);
  CHECK(valid_witness(qs, f->witness));
  CHECK(to_string(qs.certificate()).rfind("FALSIFIED witness=(", 0) == 0);
}

TEST_CASE("exact stage alone finds a witness") {
  const QuotientSpace qs = build_quotient(r2, uu, diagonal, 0);
  const auto* f = std::get_if<Falsified>(&qs.certificate());
  REQUIRE(f != nullptr);
  CHECK(valid_witness(qs, f->witness));
}

TEST_CASE("horizontal axis under u+u is not closed either") {
  // (-1,1) is at distance inf_t u(t+1) + u(-1) = 0 from the axis
  const QuotientSpace qs = build_quotient(r2, uu, halfspace);
  CHECK(qs.g().contains(v({1, 0})));
  const auto* f = std::get_if<Falsified>(&qs.certificate());
  REQUIRE(f != nullptr);
  CHECK(valid_witness(qs, f->witness));
}

TEST_CASE("closed quotients") {
  CHECK(build_quotient(r2, upper_x_abs_y, x_axis).certified_closed());
  const PLQuasiNorm abs_y(m({{0, 1}}), v({1}), v({1}), 2);
  CHECK(build_quotient(halfspace, abs_y, x_axis).certified_closed());
  CHECK(build_quotient(r2, uu, r2).certified_closed());
  CHECK_FALSE(falsify_closedness(build_quotient(r2, uu, r2)).has_value());
}

TEST_CASE("build rejects bad inputs") {
  CHECK_THROWS_AS(build_quotient(ConeSpace::orthant(2), uu, r2), Error);
  CHECK_THROWS_AS(build_quotient(r2, PLQuasiNorm(v({0, 1}), v({0, 0})), diagonal), Error);
  CHECK_THROWS_AS(build_quotient(r2, PLQuasiNorm::upper(3), r2), Error);
}

TEST_CASE("classes") {
  const QuotientSpace qs = build_quotient(r2, upper_x_abs_y, x_axis);
  CHECK(class_of(qs, v({2, 3})).rep() == v({0, 3}));
  CHECK(class_of(qs, v({5, 0})) == class_of(qs, v({0, 0})));
  CHECK(class_add(class_of(qs, v({2, 3})), class_of(qs, v({1, 1}))).rep() == v({0, 4}));
  CHECK(class_add(class_of(qs, v({2, 3})), class_of(qs, v({0, 0}))) == class_of(qs, v({2, 3})));
  CHECK(class_scale(0, class_of(qs, v({2, 3}))) == class_of(qs, v({0, 0})));
  CHECK_THROWS_AS(class_scale(-1, class_of(qs, v({2, 3}))), Error);
  CHECK(class_coordinates(class_of(qs, v({2, 3}))) == v({3}));
  CHECK(embed_coordinates(qs, v({3})) == v({0, 3}));

  const QuotientSpace ex7 = build_quotient(r2, uu, diagonal);
  CHECK(class_of(ex7, v({2, -3})) == class_of(ex7, v({5, 0})));
  CHECK_FALSE(class_of(ex7, v({2, -3})) == class_of(ex7, v({0, 0})));
}

TEST_CASE("classes of different quotients do not mix") {
  const QuotientSpace a = build_quotient(r2, upper_x_abs_y, x_axis);
  const QuotientSpace b = build_quotient(r2, upper_x_abs_y, x_axis);
  CHECK_THROWS_AS(class_add(class_of(a, v({1, 1})), class_of(b, v({1, 1}))), Error);
}

TEST_CASE("p-hat") {
  const QuotientSpace ex7 = build_quotient(r2, uu, diagonal);
  CHECK_THROWS_AS(hat_p(ex7, class_of(ex7, v({2, -3}))), Error);
  CHECK(hat_p(ex7, class_of(ex7, v({2, -3})), true) == 0);
  CHECK(hat_p(ex7, class_of(ex7, v({-2, 3})), true) == 0);

  const QuotientSpace axis = build_quotient(r2, upper_x_abs_y, x_axis);
  CHECK(hat_p(axis, class_of(axis, v({0, 0}))) == 0);
  CHECK(hat_p(axis, class_of(axis, v({2, 3}))) == 3);
  CHECK(hat_p(axis, class_of(axis, v({2, -3}))) == 3);

  const QuotientSpace uu_axis = build_quotient(r2, uu, x_axis);
  CHECK(hat_p(uu_axis, class_of(uu_axis, v({2, 3})), true) == 3);
}

TEST_CASE("quotient distance") {
  const QuotientSpace axis = build_quotient(r2, upper_x_abs_y, x_axis);
  const QuotientClass a = class_of(axis, v({2, 3}));
  CHECK(quotient_qmetric(axis, a, a) == ExtReal(0));
  CHECK(quotient_qmetric(axis, a, class_of(axis, v({7, -1}))) == ExtReal(4));

  const QuotientSpace orth = build_quotient(ConeSpace::orthant(2), uu, ConeSpace::polyhedral(m({{1, 0}, {0, 1}, {-1, -1}}), 2));
  CHECK(orth.g().dim() == 0);
  CHECK(quotient_qmetric(orth, class_of(orth, v({1, 1})), class_of(orth, v({0, 0}))).is_infinite());
}

TEST_CASE("cauchy check on the diagonal sequence") {
  const auto seq = diagonal_sequence(400);
  CHECK(seq.front() == v({1, 1}));
  const CauchyReport r = check_cauchy(uu, r2, seq, q("1/100"));
  CHECK(r.cauchy);
  CHECK(r.tail_diameter < q("1/100"));
  CHECK(check_cauchy(uu, r2, seq, 1).n0 <= check_cauchy(uu, r2, seq, q("1/10")).n0);
  // a sequence that runs away is not Cauchy
  std::vector<Vec> away;
  for (long i = 0; i < 10; ++i) away.push_back(v({i, i}));
  CHECK_FALSE(check_cauchy(uu, r2, away, 1).cauchy);
}

TEST_CASE("domination on a short sequence") {
  const QuotientSpace ex7 = build_quotient(r2, uu, diagonal);
  CHECK_FALSE(check_domination(ex7, diagonal_sequence(30), true).has_value());
  CHECK_THROWS_AS(check_domination(ex7, diagonal_sequence(3), false), Error);
}
