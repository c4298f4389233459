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
#include "qnc/check.hpp"
#include "qnc/error.hpp"
#include "region.hpp"

using namespace qnc;

TEST_CASE("generator output is valid") {
  Generator g(7);
  for (int i = 0; i < 40; ++i) {
    const ConeSpace x = g.cone(static_cast<std::size_t>(g.integer(1, 3)));
    CHECK(member(x, g.member_of(x)));
    CHECK(validate_qnorm(g.norm_for(x), x));
    const ConeSpace y = g.subcone_of(x);
    CHECK(cone_includes(x, y));
  }
}

TEST_CASE("runs are reproducible") {
  const PropertyResult a = run_property("qmetric_triangle", 3, 20);
  const PropertyResult b = run_property("qmetric_triangle", 3, 20);
  CHECK(a.failures == b.failures);
  CHECK(a.first_failure == b.first_failure);
  Generator g1(11), g2(11);
  CHECK(g1.vec(5, 100) == g2.vec(5, 100));
}

TEST_CASE("every property passes a short run") {
  for (const auto& r : run_property_suite(2, 5)) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.passed());
  }
}

TEST_CASE("unknown property names are rejected") { CHECK_THROWS_AS(run_property("nope", 1, 1), Error); }
