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
#include "qnc/oracle.hpp"

using namespace qnc;
using namespace qnc::test;

TEST_CASE("grid infimum") {
  const PLQuasiNorm uu = PLQuasiNorm::upper(2);
  CHECK(grid_inf(uu, v({2, -3}), {v({1, 1})}, 10, q("1/100")) == 0);
  CHECK(grid_inf(uu, v({0, 0}), {v({1, 0})}, 1, q("1/2")) == 0);
  CHECK(grid_inf(uu, v({2, 3}), {v({1, 0})}, 10, q("1/100")) == 3);
}

TEST_CASE("grid operator norm") {
  const NormedCone plane{ConeSpace::full(2), PLQuasiNorm::upper(2)};
  CHECK(grid_sup_opnorm(LinMap(zero_matrix(2, 2), plane, plane), 2, q("1/2")) == 0);
  const Rational id = grid_sup_opnorm(LinMap(identity(2), plane, plane), 2, q("1/4"));
  CHECK(id <= 1);
  CHECK(id > q("1/2"));
  const NormedCone abs_y{ConeSpace::full(2), PLQuasiNorm(m({{0, 1}}), v({1}), v({1}), 2)};
  const LinMap px(m({{1, 0}}), abs_y, upper_line());
  CHECK(grid_sup_opnorm(px, 10, 1) < grid_sup_opnorm(px, 100, 10));
}
