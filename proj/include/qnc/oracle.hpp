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

// Brute-force grid evaluations used to cross-check the LP results. They
// only call eval() and member(); nothing here touches the LP code.

#include <vector>

#include "qnc/operators.hpp"
#include "qnc/qnorm.hpp"
#include "qnc/rational.hpp"

namespace qnc {

/// min of p(x0 + sum t_i b_i) over t_i in {-range, -range + step, ...} ∩ [-range, range].
Rational grid_inf(const PLQuasiNorm& p, const Vec& x0, const std::vector<Vec>& basis, const Rational& range,
                  const Rational& step);

/// max of q(f(x)) over grid points x of [-range, range]^n that lie in the
/// source cone with p(x) <= 1.
Rational grid_sup_opnorm(const LinMap& f, const Rational& range, const Rational& step);

}  // namespace qnc
