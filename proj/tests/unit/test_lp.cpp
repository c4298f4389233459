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
#include "qnc/lp.hpp"

using namespace qnc;
using namespace qnc::test;

namespace {

LinearConstraint row(Vec c, Relation r, long rhs) { return {std::move(c), r, Rational(rhs)}; }

}  // namespace

TEST_CASE("epigraph of u at 5") {
  // variables (t, x)
  LPProblem p;
  p.objective = v({1, 0});
  p.constraints = {row(v({1, -1}), Relation::GreaterEq, 0), row(v({1, 0}), Relation::GreaterEq, 0),
                   row(v({0, 1}), Relation::Equal, 5)};
  const LPResult r = solve(p);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == 5);
}

TEST_CASE("infeasible and unbounded programs") {
  LPProblem infeasible;
  infeasible.objective = v({0});
  infeasible.constraints = {row(v({1}), Relation::GreaterEq, 1), row(v({1}), Relation::LessEq, 0)};
  CHECK(solve(infeasible).status == LPStatus::Infeasible);

  LPProblem unbounded;
  unbounded.sense = Sense::Maximize;
  unbounded.objective = v({1});
  unbounded.constraints = {row(v({1}), Relation::GreaterEq, 0)};
  CHECK(solve(unbounded).status == LPStatus::Unbounded);
}

TEST_CASE("degenerate program terminates") {
  // several constraints active at the optimum
  LPProblem p;
  p.sense = Sense::Maximize;
  p.objective = v({1, 1});
  p.constraints = {row(v({1, 0}), Relation::LessEq, 1), row(v({0, 1}), Relation::LessEq, 1),
                   row(v({1, 1}), Relation::LessEq, 2), row(v({2, 1}), Relation::LessEq, 3)};
  const LPResult r = solve(p);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == 2);
}

TEST_CASE("coset minimisation") {
  const PLQuasiNorm uu = PLQuasiNorm::upper(2);
  const CosetMinimum a = minimize_pl_over_coset(uu, v({2, -3}), Subspace({v({1, 1})}, 2));
  REQUIRE(a.feasible);
  CHECK(a.value == 0);
  CHECK(uu(a.point) == 0);
  CHECK(minimize_pl_over_coset(uu, v({0, 0}), Subspace({v({1, 2})}, 2)).value == 0);
  CHECK(minimize_pl_over_coset(uu, v({2, 3}), Subspace({v({1, 0})}, 2)).value == 3);
}

TEST_CASE("coset minimisation inside a cone") {
  const PLQuasiNorm uu = PLQuasiNorm::upper(2);
  const ConeSpace orthant = ConeSpace::orthant(2);
  CHECK_FALSE(minimize_pl_over_coset(uu, v({-1, -1}), Subspace::zero(2), &orthant).feasible);
  const ConeSpace strict = ConeSpace::strict_first_orthant(2);
  const CosetMinimum s = minimize_pl_over_coset(uu, v({3, 0}), Subspace::zero(2), &strict);
  REQUIRE(s.feasible);
  CHECK(s.value == 3);
}
