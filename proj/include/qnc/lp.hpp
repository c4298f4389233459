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

// Exact linear programming over the rationals.

#include <optional>
#include <vector>

#include "qnc/cone.hpp"
#include "qnc/qnorm.hpp"
#include "qnc/rational.hpp"

namespace qnc {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };

struct LinearConstraint {
  Vec coeffs;
  Relation relation = Relation::LessEq;
  Rational rhs;
};

/// Variables are free unless a bound is given.
struct LPProblem {
  Sense sense = Sense::Minimize;
  Vec objective;
  std::vector<LinearConstraint> constraints;
  std::vector<std::optional<Rational>> lower;  // empty, or one entry per variable
  std::vector<std::optional<Rational>> upper;

  std::size_t num_vars() const { return objective.size(); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;  // meaningful when Optimal
  Vec point;       // an optimal point when Optimal
};

/// Two-phase dense simplex with Bland's rule; terminates on every input.
/// Throws Error(Malformed) on inconsistent dimensions.
LPResult solve(const LPProblem& problem);

struct CosetMinimum {
  bool feasible = false;
  Rational value;     // inf of p over the (restricted) coset
  Vec coefficients;   // t with x0 + sum t_i b_i attaining it (closure point)
  Vec point;          // x0 + sum t_i b_i
};

/// inf { p(x0 + sum t_i b_i) } over t, optionally with x0 + sum t_i b_i in
/// `extra_cone`. Epigraph encoding: s_i >= wplus_i (Mz)_i, s_i >= -wminus_i (Mz)_i,
/// s_i >= 0, minimise sum s_i.
CosetMinimum minimize_pl_over_coset(const PLQuasiNorm& p, const Vec& x0, const Subspace& l,
                                    const ConeSpace* extra_cone = nullptr);

}  // namespace qnc
