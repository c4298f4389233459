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
#include "serialize.hpp"

using namespace qnc;
using namespace qnc::test;

TEST_CASE("cone documents round trip") {
  const ConeSpace half = space_from_json(parse_json(R"({"dim": 2, "kind": "polyhedral", "A": [[0, 1]]})"));
  CHECK(half == ConeSpace::polyhedral(m({{0, 1}}), 2));
  CHECK(space_from_json(to_json(half)) == half);
  CHECK(space_from_json(parse_json(R"({"dim": 3, "kind": "strict_first_orthant"})")).is_strict());
  CHECK_THROWS_AS(space_from_json(parse_json(R"({"dim": 2, "kind": "ball"})")), Error);
  CHECK_THROWS_AS(space_from_json(parse_json(R"({"kind": "full"})")), Error);
}

TEST_CASE("norm documents round trip") {
  const PLQuasiNorm p = norm_from_json(parse_json(R"({"M": [[0, 1]], "dim": 2, "wplus": ["1/2"], "wminus": [1]})"));
  CHECK(p(v({9, 4})) == 2);
  CHECK(norm_from_json(to_json(p)) == p);
  CHECK(norm_from_json(to_json(PLQuasiNorm::upper(3))) == PLQuasiNorm::upper(3));
  CHECK_THROWS_AS(norm_from_json(parse_json(R"({"wplus": [0.5], "wminus": [1]})")), Error);
  CHECK_THROWS_AS(norm_from_json(parse_json(R"({"wplus": [1, 1], "wminus": [1]})")), Error);
  CHECK_THROWS_AS(parse_json("{not json"), Error);
}

TEST_CASE("map documents") {
  const LinMap f = map_from_json(parse_json(R"({
    "matrix": [[0, 1]],
    "source": {"space": {"dim": 2, "kind": "polyhedral", "A": [[0, 1]]},
               "norm": {"M": [[0, 1]], "dim": 2, "wplus": [1], "wminus": [1]}},
    "target": {"space": {"dim": 1, "kind": "orthant"}, "norm": {"wplus": [1], "wminus": [0]}}})"),
                                 ".");
  CHECK(f.norm() == ExtReal(1));
  CHECK(to_json(analyze(f))["factorization_norms"][0] == "1");
}

TEST_CASE("quotient descriptions") {
  const Json j = parse_json(R"({"space": {"dim": 2, "kind": "full"}, "p": {"wplus": [1, 1], "wminus": [0, 0]},
                                "subcone": {"dim": 2, "kind": "polyhedral", "A": [[1, -1], [-1, 1]]}})");
  const QuotientDescription d = quotient_description_from_json(j, ".");
  const Json desc = describe(build_quotient(d.space, d.p, d.subcone));
  CHECK(desc["certificate"].get<std::string>().rfind("FALSIFIED", 0) == 0);
  CHECK(desc.contains("witness"));
  CHECK(desc["G_basis"].size() == 1);
}
