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

#include "qnc/qnorm.hpp"

#include <set>

#include "qnc/error.hpp"
#include "qnc/lp.hpp"

namespace qnc {

namespace {

constexpr std::size_t kMaxPieces = 1u << 16;

void check_weights(const Vec& w, std::size_t k, const char* what) {
  require_dim(w, k, what);
  for (const auto& x : w)
    if (sgn(x) < 0) fail(ErrorKind::Malformed, std::string(what) + ": weights must be nonnegative");
}

Rational positive_part(const Rational& t) { return sgn(t) > 0 ? t : Rational(0); }

}  // namespace

PLQuasiNorm::PLQuasiNorm(Matrix m, Vec wplus, Vec wminus, std::size_t dim)
    : m_(std::move(m)), wplus_(std::move(wplus)), wminus_(std::move(wminus)), dim_(dim) {
  if (dim_ == 0) fail(ErrorKind::Malformed, "quasi-norm dimension must be positive");
  for (const auto& row : m_) require_dim(row, dim_, "quasi-norm matrix row");
  check_weights(wplus_, m_.size(), "wplus");
  check_weights(wminus_, m_.size(), "wminus");
}

PLQuasiNorm::PLQuasiNorm(Vec wplus, Vec wminus)
    : PLQuasiNorm(identity(wplus.size()), wplus, std::move(wminus), wplus.size()) {}

PLQuasiNorm PLQuasiNorm::upper(std::size_t dim) {
  Vec ones(dim, Rational(1));
  return PLQuasiNorm(ones, zeros(dim));
}

Rational PLQuasiNorm::operator()(const Vec& x) const {
  require_dim(x, dim_, "quasi-norm argument");
  Rational s = 0;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    const Rational t = dot(m_[i], x);
    s += wplus_[i] * positive_part(t) + wminus_[i] * positive_part(-t);
  }
  return s;
}

std::vector<Vec> PLQuasiNorm::linear_pieces() const {
  std::set<Vec> pieces{zeros(dim_)};
  for (std::size_t i = 0; i < m_.size(); ++i) {
    const Vec up = wplus_[i] * m_[i];
    const Vec down = -(wminus_[i] * m_[i]);
    if (up == down) {
      if (is_zero(up)) continue;
      std::set<Vec> next;
      for (const auto& s : pieces) next.insert(s + up);
      pieces = std::move(next);
      continue;
    }
    std::set<Vec> next;
    for (const auto& s : pieces) {
      next.insert(s + up);
      next.insert(s + down);
    }
    if (next.size() > kMaxPieces)
      fail(ErrorKind::Unsupported, "quasi-norm has too many linear pieces for exact decomposition");
    pieces = std::move(next);
  }
  return {pieces.begin(), pieces.end()};
}

Rational PLQuasiNorm::lipschitz_sup() const {
  Rational l = 0;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    Rational row = 0;
    for (const auto& a : m_[i]) row += abs(a);
    l += (wplus_[i] > wminus_[i] ? wplus_[i] : wminus_[i]) * row;
  }
  return l;
}

PLQuasiNorm PLQuasiNorm::compose(const Matrix& f, std::size_t source_dim) const {
  if (f.size() != dim_) fail(ErrorKind::Dimension, "compose: map output dimension differs from norm dimension");
  for (const auto& row : f) require_dim(row, source_dim, "compose: map row");
  Matrix mf = m_.empty() ? Matrix{} : m_ * f;
  return PLQuasiNorm(std::move(mf), wplus_, wminus_, source_dim);
}

Rational eval(const PLQuasiNorm& p, const Vec& x) { return p(x); }

namespace {

Matrix weighted_rows(const PLQuasiNorm& p) {
  Matrix rows;
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (sgn(p.wplus()[i]) > 0 || sgn(p.wminus()[i]) > 0) rows.push_back(p.matrix()[i]);
  return rows;
}

}  // namespace

Subspace symmetric_kernel(const PLQuasiNorm& p) { return Subspace(null_space(weighted_rows(p), p.dim()), p.dim()); }

bool validate_qnorm(const PLQuasiNorm& p, const ConeSpace& x) {
  if (p.dim() != x.dim()) fail(ErrorKind::Dimension, "validate_qnorm: norm and cone dimensions differ");
  const Subspace l = lineality(x);
  if (l.dim() == 0) return true;
  const Matrix w = weighted_rows(p);
  if (w.empty()) return false;
  // injective on the lineality space  <=>  W B^T has full column rank
  return rank(w * transpose(l.basis()), l.dim()) == l.dim();
}

namespace {

void require_member(const ConeSpace& space, const Vec& v, const char* what) {
  require_dim(v, space.dim(), what);
  if (!member(space, v)) fail(ErrorKind::NotMember, std::string(what) + " " + to_string(v) + " is not in the cone");
}

}  // namespace

ExtReal qmetric(const PLQuasiNorm& p, const ConeSpace& space, const Vec& x, const Vec& y) {
  if (p.dim() != space.dim()) fail(ErrorKind::Dimension, "qmetric: norm and cone dimensions differ");
  require_member(space, x, "point");
  require_member(space, y, "point");
  const Vec a = y - x;
  if (!member(space, a)) return ExtReal::infinity();
  return ExtReal(p(a));
}

ExtReal sym_metric(const PLQuasiNorm& p, const ConeSpace& space, const Vec& x, const Vec& y) {
  return max(qmetric(p, space, x, y), qmetric(p, space, y, x));
}

bool ball_member(const PLQuasiNorm& p, const ConeSpace& space, const Vec& center, const Rational& r, const Vec& y,
                 bool closed) {
  if (sgn(r) <= 0) fail(ErrorKind::Precondition, "ball radius must be positive");
  const ExtReal d = qmetric(p, space, center, y);
  return closed ? d <= ExtReal(r) : d < ExtReal(r);
}

ExtReal dist_to_subspace(const PLQuasiNorm& p, const ConeSpace& space, const Vec& x, const Subspace& l,
                         Direction direction) {
  if (p.dim() != space.dim() || l.dim_ambient() != space.dim())
    fail(ErrorKind::Dimension, "dist_to_subspace: dimensions differ");
  require_member(space, x, "point");
  for (const auto& b : l.basis())
    if (!member(space, b) || !member(space, -b))
      fail(ErrorKind::Precondition, "dist_to_subspace: the subspace is not contained in the cone");
  const Vec base = direction == Direction::FromX ? -x : x;
  const CosetMinimum m = minimize_pl_over_coset(p, base, l, &space);
  if (!m.feasible) return ExtReal::infinity();
  return ExtReal(m.value);
}

}  // namespace qnc
