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

// Linear maps between quasi-normed cones: operator norm, continuity,
// injectivity variants, openness, dual cone and polar, factorisation
// through the quotient by the kernel.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnc/cone.hpp"
#include "qnc/qnorm.hpp"
#include "qnc/quotient.hpp"
#include "qnc/rational.hpp"

namespace qnc {

struct NormedCone {
  ConeSpace space;
  PLQuasiNorm norm;

  friend bool operator==(const NormedCone&, const NormedCone&) = default;
};

/// (R, u): the target of dual functionals.
NormedCone upper_line();

class LinMap {
 public:
  /// matrix is dim_out x dim_in. Throws Precondition unless the source cone
  /// is mapped into the target cone.
  LinMap(Matrix matrix, NormedCone source, NormedCone target);

  const Matrix& matrix() const { return matrix_; }
  const NormedCone& source() const { return source_; }
  const NormedCone& target() const { return target_; }
  std::size_t dim_in() const { return source_.space.dim(); }
  std::size_t dim_out() const { return target_.space.dim(); }

  Vec operator()(const Vec& x) const { return matrix_ * x; }

  /// op_norm(*this), computed once and shared by copies.
  const ExtReal& norm() const;

 private:
  struct Cache;
  Matrix matrix_;
  NormedCone source_;
  NormedCone target_;
  std::shared_ptr<Cache> cache_;
};

/// F(cl source) ⊆ cl target, with the strict-family condition on top.
bool maps_into(const Matrix& f, const ConeSpace& source, const ConeSpace& target);

/// sup { q(f(x)) : x in X, p(x) <= 1 }; infinity when unbounded.
ExtReal op_norm(const LinMap& f);
bool is_continuous(const LinMap& f);

/// g o f. Requires f.target == g.source.
LinMap compose(const LinMap& g, const LinMap& f);

struct InjectivityResult {
  bool yes = true;
  std::optional<std::pair<Vec, Vec>> witness;  // (x, y) with f(x) = f(y)
};

/// f(x) = f(y) implies p(x) = p(y). A witness has p(x) != p(y).
InjectivityResult is_p_injective(const LinMap& f);

/// The quotient of the source by ker f ∩ source (G = ker f ∩ lineality).
/// Skips the quasi-norm check of build_quotient.
QuotientSpace kernel_quotient(const LinMap& f);

/// f(x) = f(y) implies y in [x] for the quotient by G_ker f. A witness has
/// y - x outside G.
InjectivityResult is_G_injective(const LinMap& f, const QuotientSpace& qs_ker);

struct Openness {
  bool open = false;
  Rational m;          // smallest admissible M when open
  std::string reason;  // when not open
};

/// M* = sup over y in Y with q(y) <= 1 of min { p(x) : f(x) = y, x in X }.
Openness openness_constant(const LinMap& f);

/// sup of numer(y) / q(y) over y in the closed cone {B y >= 0}, for numer
/// convex, positively homogeneous and lower semicontinuous (infinity
/// allowed). Exact: numer is evaluated on the extreme rays of every
/// linearity cell of q.
ExtReal sup_ratio(const Matrix& b, const PLQuasiNorm& q, const std::function<ExtReal(const Vec&)>& numer);

/// ||phi||_{p, p-hat} computed as sup p-hat([x]) / p(x).
ExtReal phi_norm(const QuotientSpace& qs);

/// sup { q(t z) : [z] in X/Y, p-hat([z]) <= 1 } for a matrix t acting on
/// class coordinates.
ExtReal quotient_map_norm(const QuotientSpace& qs, const Matrix& t, const NormedCone& target);

// -- dual cone -----------------------------------------------------------

struct DualElement {
  Vec functional;
  Rational norm;
};

/// ||h||_{p,u}; infinity when h is not continuous.
ExtReal functional_norm(const NormedCone& source, const Vec& h);

/// Generators of the continuous functionals vanishing on G. The cone is
/// cone(pieces of p) + (dual of X, negated), intersected with the
/// annihilator of G; lineality directions are listed with both signs.
std::vector<DualElement> polar(const QuotientSpace& qs);

/// T f = f o phi between (X/Y)* (functionals on class coordinates) and Y⁰.
class QuotientDualIso {
 public:
  explicit QuotientDualIso(QuotientSpace qs);
  const QuotientSpace& space() const { return qs_; }
  Vec to_polar(const Vec& f) const;
  /// Requires h to vanish on G.
  Vec to_quotient_dual(const Vec& h) const;

 private:
  QuotientSpace qs_;
  Matrix pullback_;  // column i: class coordinates of [e_i]
};

/// ||f||_{p-hat,u} for f on class coordinates.
ExtReal quotient_functional_norm(const QuotientSpace& qs, const Vec& f);

// -- factorisation ---------------------------------------------------------

struct Factorization {
  QuotientSpace qs;
  Matrix t_tilde;  // dim_out x quotient_dim
  ExtReal norm_t;
  ExtReal norm_t_tilde;
};

/// T = T~ o phi over the quotient by G_ker T. Requires G_ker T closed.
Factorization factorize(const LinMap& t);

// -- bounds from below -------------------------------------------------------

/// inf { q(f(x)) : x in X, p(x) = 1 } (k*), 0 when the set is empty.
Rational lower_bound_constant(const LinMap& f);
/// sup { p(x) : x in X, q(f(x)) <= 1 } (c*).
ExtReal inverse_bound_constant(const LinMap& f);

/// Fiber minimum min { p(x) : f(x) = y, x in X }; infinity if unreachable.
ExtReal fiber_min(const LinMap& f, const Vec& y);

struct AnalysisReport {
  ExtReal norm;
  bool continuous = false;
  InjectivityResult p_injective;
  InjectivityResult g_injective;
  Openness openness;
  std::optional<Factorization> factorization;
  std::string factorization_error;
};

AnalysisReport analyze(const LinMap& f);

}  // namespace qnc
