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

#pragma once

// Seeded random instances and the randomized invariant suite.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qnc/cone.hpp"
#include "qnc/operators.hpp"
#include "qnc/qnorm.hpp"
#include "qnc/quotient.hpp"

namespace qnc {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi);
  bool coin(double p_true = 0.5);
  /// num / den with |num| <= max_abs * den and 1 <= den <= max_den.
  Rational rational(long max_abs, long max_den = 4);
  Rational positive_rational(long max_abs, long max_den = 4);
  Vec vec(std::size_t n, long max_abs);

  /// Full, orthant, polyhedral (with or without lineality) or, when allowed,
  /// the strict family.
  ConeSpace cone(std::size_t dim, bool allow_strict = true);
  /// Random PL quasi-norm passing validate_qnorm on `space`.
  PLQuasiNorm norm_for(const ConeSpace& space);
  /// Identity M, weights in [1, wmax].
  PLQuasiNorm coercive_norm(std::size_t dim, long wmax);
  /// Nonnegative integer combination of the cone's generators.
  Vec member_of(const ConeSpace& space, long max_coeff = 3);
  /// Polyhedral Y ⊆ X whose lineality is a random subspace of lineality(X).
  ConeSpace subcone_of(const ConeSpace& space);
  /// Random matrix mapping source into target (retries until it does).
  Matrix map_between(const ConeSpace& source, const ConeSpace& target, long max_abs = 2);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;
  bool passed() const { return failures == 0; }
};

/// Names of every property in the suite, in run order.
std::vector<std::string> property_names();

/// Runs one property on `cases` random instances. Case i uses seed
/// (seed, name, i) so properties are independent of each other.
PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t cases);

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases);

}  // namespace qnc
