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

#include "qnc/oracle.hpp"

#include "qnc/error.hpp"

namespace qnc {

namespace {

std::vector<Rational> axis(const Rational& range, const Rational& step) {
  if (sgn(step) <= 0 || sgn(range) <= 0) fail(ErrorKind::Precondition, "grid range and step must be positive");
  std::vector<Rational> ticks;
  for (Rational t = -range; t <= range; t += step) ticks.push_back(t);
  return ticks;
}

// Visits every point of axis^k in lexicographic order.
template <class F>
void for_each_grid_point(const std::vector<Rational>& ticks, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k, 0);
  std::vector<Rational> t(k, ticks.front());
  while (true) {
    f(t);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] + 1 == ticks.size()) {
      idx[i - 1] = 0;
      t[i - 1] = ticks.front();
      --i;
    }
    if (i == 0) return;
    ++idx[i - 1];
    t[i - 1] = ticks[idx[i - 1]];
  }
}

}  // namespace

Rational grid_inf(const PLQuasiNorm& p, const Vec& x0, const std::vector<Vec>& basis, const Rational& range,
                  const Rational& step) {
  require_dim(x0, p.dim(), "grid_inf base point");
  for (const auto& b : basis) require_dim(b, p.dim(), "grid_inf direction");
  const auto ticks = axis(range, step);
  if (basis.empty()) return p(x0);
  Rational best = p(x0);
  for_each_grid_point(ticks, basis.size(), [&](const std::vector<Rational>& t) {
    Vec x = x0;
    for (std::size_t i = 0; i < basis.size(); ++i) x = x + t[i] * basis[i];
    const Rational v = p(x);
    if (v < best) best = v;
  });
  return best;
}

Rational grid_sup_opnorm(const LinMap& f, const Rational& range, const Rational& step) {
  const auto ticks = axis(range, step);
  Rational best = 0;
  for_each_grid_point(ticks, f.dim_in(), [&](const std::vector<Rational>& t) {
    const Vec x(t.begin(), t.end());
    if (!member(f.source().space, x) || f.source().norm(x) > 1) return;
    const Rational v = f.target().norm(f(x));
    if (v > best) best = v;
  });
  return best;
}

}  // namespace qnc
