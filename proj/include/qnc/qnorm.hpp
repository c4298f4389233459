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

// Piecewise-linear quasi-norms and the extended quasi-metric they induce.

#include <cstddef>
#include <vector>

#include "qnc/cone.hpp"
#include "qnc/rational.hpp"

namespace qnc {

/// p(x) = sum_i wplus_i * u((Mx)_i) + wminus_i * u(-(Mx)_i),  u(t) = max(t, 0).
///
/// Each term equals max(wplus_i t, -wminus_i t), so p is the maximum of
/// finitely many linear functionals (see linear_pieces).
class PLQuasiNorm {
 public:
  /// M is k x dim, both weight vectors have length k and are nonnegative.
  PLQuasiNorm(Matrix m, Vec wplus, Vec wminus, std::size_t dim);
  /// M = identity.
  PLQuasiNorm(Vec wplus, Vec wminus);

  /// u(x_0) + ... + u(x_{n-1})
  static PLQuasiNorm upper(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return m_.size(); }
  const Matrix& matrix() const { return m_; }
  const Vec& wplus() const { return wplus_; }
  const Vec& wminus() const { return wminus_; }

  Rational operator()(const Vec& x) const;

  /// Gradients g_s with p(x) = max_s g_s.x, deduplicated. Rows with both
  /// weights zero contribute nothing.
  std::vector<Vec> linear_pieces() const;

  /// L such that |p(x) - p(y)| <= L * max_i |x_i - y_i|.
  Rational lipschitz_sup() const;

  /// Same norm precomposed with a linear map: x -> p(F x).
  PLQuasiNorm compose(const Matrix& f, std::size_t source_dim) const;

  friend bool operator==(const PLQuasiNorm&, const PLQuasiNorm&) = default;

 private:
  Matrix m_;
  Vec wplus_;
  Vec wminus_;
  std::size_t dim_;
};

Rational eval(const PLQuasiNorm& p, const Vec& x);

/// True when no nonzero x with x, -x in X has p(x) = p(-x) = 0.
bool validate_qnorm(const PLQuasiNorm& p, const ConeSpace& x);

/// Subspace {x : p(x) = p(-x) = 0}.
Subspace symmetric_kernel(const PLQuasiNorm& p);

/// d_p(x,y) = p(y - x) when y - x lies in X, +inf otherwise.
ExtReal qmetric(const PLQuasiNorm& p, const ConeSpace& space, const Vec& x, const Vec& y);

/// max(d_p(x,y), d_p(y,x)).
ExtReal sym_metric(const PLQuasiNorm& p, const ConeSpace& space, const Vec& x, const Vec& y);

/// y in B(center, r) (closed = false) or in the closed ball (closed = true).
bool ball_member(const PLQuasiNorm& p, const ConeSpace& space, const Vec& center, const Rational& r,
                 const Vec& y, bool closed);

enum class Direction {
  FromX,  // inf_g d_p(x, g)
  ToX,    // inf_g d_p(g, x)
};

/// Exact infimum over g in L of the directed distance between x and g.
ExtReal dist_to_subspace(const PLQuasiNorm& p, const ConeSpace& space, const Vec& x, const Subspace& l,
                         Direction direction);

}  // namespace qnc
