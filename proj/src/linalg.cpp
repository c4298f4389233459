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

#include "qnc/linalg.hpp"

#include "qnc/error.hpp"

namespace qnc {

Rref rref(const Matrix& m, std::size_t cols) {
  Matrix a = m;
  for (const auto& row : a)
    if (row.size() != cols) fail(ErrorKind::Dimension, "rref: ragged matrix");

  Rref out;
  out.cols = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[r], a[pivot]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

std::vector<Vec> null_space(const Matrix& m, std::size_t cols) {
  const Rref e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zeros(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> independent_subset(const std::vector<Vec>& vs, std::size_t dim) {
  std::vector<Vec> kept;
  std::size_t current = 0;
  for (const auto& v : vs) {
    require_dim(v, dim, "independent_subset");
    kept.push_back(v);
    const std::size_t r = rank(kept, dim);
    if (r == current)
      kept.pop_back();
    else
      current = r;
  }
  return kept;
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b, std::size_t cols) {
  require_dim(b, m.size(), "solve_linear rhs");
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Rref e = rref(aug, cols + 1);
  Vec x = zeros(cols);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;  // 0 = nonzero
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

}  // namespace qnc
