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
#include "qnc/cone.hpp"
#include "qnc/error.hpp"
#include "qnc/linalg.hpp"

using namespace qnc;
using namespace qnc::test;

TEST_CASE("rationals print in lowest terms") {
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("-4/2")) == "-2");
  CHECK(to_string(ExtReal::infinity()) == "inf");
  CHECK(parse_vec_csv("1, -1/2,3") == Vec{1, q("-1/2"), 3});
  CHECK(parse_rational("0.5") == q("1/2"));
  CHECK(parse_rational("-1.25e1") == q("-25/2"));
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("extended reals order infinity last") {
  CHECK(ExtReal(5) < ExtReal::infinity());
  CHECK(ExtReal::infinity() + ExtReal(1) == ExtReal::infinity());
  CHECK(max(ExtReal(2), ExtReal(3)) == ExtReal(3));
}

TEST_CASE("rank and null space") {
  const Matrix a = m({{1, 2}, {2, 4}});
  CHECK(rank(a, 2) == 1);
  const auto ns = null_space(a, 2);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(a * ns[0]));
  CHECK(null_space({}, 3).size() == 3);
}

TEST_CASE("membership") {
  CHECK_FALSE(member(ConeSpace::polyhedral(m({{0, 1}}), 2), v({3, -1})));
  CHECK(member(ConeSpace::strict_first_orthant(3), v({0, 0, 0})));
  CHECK_FALSE(member(ConeSpace::strict_first_orthant(3), v({0, 1, 0})));
  CHECK(member(ConeSpace::strict_first_orthant(3), v({1, 0, 0})));
  CHECK(member(ConeSpace::polyhedral(m({{1, -1}, {-1, 1}}), 2), v({2, 2})));
  CHECK(member(ConeSpace::orthant(2), v({0, 5})));
  CHECK_THROWS_AS(member(ConeSpace::full(2), v({1})), Error);
}

TEST_CASE("lineality spaces") {
  const Subspace half = lineality(ConeSpace::polyhedral(m({{0, 1}}), 2));
  REQUIRE(half.dim() == 1);
  CHECK(half.contains(v({1, 0})));
  const Subspace line = lineality(ConeSpace::polyhedral(m({{1, -1}, {-1, 1}}), 2));
  REQUIRE(line.dim() == 1);
  CHECK(line.contains(v({1, 1})));
  CHECK(lineality(ConeSpace::strict_first_orthant(4)).dim() == 0);
  CHECK(lineality(ConeSpace::orthant(3)).dim() == 0);
  CHECK(lineality(ConeSpace::full(3)).dim() == 3);
}

TEST_CASE("subspace membership and reduction") {
  const Subspace s({v({1, 1})}, 2);
  CHECK(subspace_member(s, v({3, 3})));
  CHECK_FALSE(subspace_member(s, v({1, 0})));
  CHECK(subspace_member(Subspace::zero(2), v({0, 0})));
  CHECK(s.contains(s.reduce(v({2, -3})) - v({2, -3})));
  CHECK(s.reduce(v({4, 4})) == v({0, 0}));
  const auto ann = s.annihilator();
  REQUIRE(ann.size() == 1);
  CHECK(dot(ann[0], v({1, 1})) == 0);
}

TEST_CASE("subspace intersection and inclusion") {
  const Subspace a({v({1, 0, 0}), v({0, 1, 0})}, 3);
  const Subspace b({v({0, 1, 0}), v({0, 0, 1})}, 3);
  const Subspace c = a.intersect(b);
  REQUIRE(c.dim() == 1);
  CHECK(c.contains(v({0, 1, 0})));
  CHECK(a.includes(c));
  CHECK_FALSE(c.includes(a));
}

TEST_CASE("cone generators of a wedge") {
  const ConeGenerators g = cone_generators(m({{1, 0}, {0, 1}}), 2);
  CHECK(g.lineality.empty());
  CHECK(g.rays.size() == 2);
  const ConeGenerators h = cone_generators(m({{0, 1}}), 2);
  CHECK(h.lineality.size() == 1);
  CHECK(h.rays.size() == 1);
  CHECK(primitive(v({4, -6})) == v({2, -3}));
}
