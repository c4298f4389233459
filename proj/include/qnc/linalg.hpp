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

// Exact Gaussian elimination over the rationals.

#include <cstddef>
#include <optional>
#include <vector>

#include "qnc/rational.hpp"

namespace qnc {

struct Rref {
  Matrix rows;                       // nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t cols = 0;
};

Rref rref(const Matrix& m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that
/// column. For m = [[0,1]] this is {(1,0)}; for [[1,-1]] it is {(1,1)}.
std::vector<Vec> null_space(const Matrix& m, std::size_t cols);

/// Greedy maximal linearly independent subset, original vectors kept.
std::vector<Vec> independent_subset(const std::vector<Vec>& vs, std::size_t dim);

/// Some x with m x = b, if any.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b, std::size_t cols);

}  // namespace qnc
