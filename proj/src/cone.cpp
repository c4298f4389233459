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

#include "qnc/cone.hpp"

#include <algorithm>
#include <set>

#include "qnc/error.hpp"

namespace qnc {

std::string to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::Full: return "full";
    case ConeKind::Polyhedral: return "polyhedral";
    case ConeKind::Orthant: return "orthant";
    case ConeKind::StrictFirstCoordOrthant: return "strict_first_orthant";
  }
  return "unknown";
}

ConeSpace ConeSpace::full(std::size_t dim) {
  if (dim == 0) fail(ErrorKind::Malformed, "cone dimension must be positive");
  return ConeSpace(dim, ConeKind::Full, {});
}

ConeSpace ConeSpace::orthant(std::size_t dim) {
  if (dim == 0) fail(ErrorKind::Malformed, "cone dimension must be positive");
  return ConeSpace(dim, ConeKind::Orthant, {});
}

ConeSpace ConeSpace::strict_first_orthant(std::size_t dim) {
  if (dim == 0) fail(ErrorKind::Malformed, "cone dimension must be positive");
  return ConeSpace(dim, ConeKind::StrictFirstCoordOrthant, {});
}

ConeSpace ConeSpace::polyhedral(Matrix a, std::size_t dim) {
  if (dim == 0) fail(ErrorKind::Malformed, "cone dimension must be positive");
  for (const auto& row : a) require_dim(row, dim, "polyhedral constraint row");
  return ConeSpace(dim, ConeKind::Polyhedral, std::move(a));
}

Matrix ConeSpace::closure_constraints() const {
  switch (kind_) {
    case ConeKind::Full: return {};
    case ConeKind::Polyhedral: return a_;
    case ConeKind::Orthant:
    case ConeKind::StrictFirstCoordOrthant: return identity(dim_);
  }
  return {};
}

bool member(const ConeSpace& space, const Vec& v) {
  require_dim(v, space.dim(), "member");
  switch (space.kind()) {
    case ConeKind::Full: return true;
    case ConeKind::Polyhedral:
      return std::all_of(space.constraints().begin(), space.constraints().end(),
                         [&](const Vec& row) { return sgn(dot(row, v)) >= 0; });
    case ConeKind::Orthant:
      return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) >= 0; });
    case ConeKind::StrictFirstCoordOrthant:
      if (is_zero(v)) return true;
      return sgn(v[0]) > 0 && std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) >= 0; });
  }
  return false;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const std::vector<Vec>& spanning, std::size_t dim_ambient)
    : basis_(independent_subset(spanning, dim_ambient)), dim_ambient_(dim_ambient) {
  if (dim_ambient == 0) fail(ErrorKind::Malformed, "subspace ambient dimension must be positive");
  echelon_ = rref(basis_, dim_ambient_);
  std::vector<bool> is_pivot(dim_ambient_, false);
  for (auto p : echelon_.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < dim_ambient_; ++c)
    if (!is_pivot[c]) complement_.push_back(c);
}

Subspace Subspace::whole(std::size_t dim_ambient) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < dim_ambient; ++i) basis.push_back(unit(dim_ambient, i));
  return Subspace(basis, dim_ambient);
}

Vec Subspace::reduce(const Vec& v) const {
  require_dim(v, dim_ambient_, "coset representative");
  Vec out = v;
  for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
    const Rational f = out[echelon_.pivots[i]];
    if (sgn(f) == 0) continue;
    const Vec& row = echelon_.rows[i];
    for (std::size_t j = 0; j < dim_ambient_; ++j) out[j] -= f * row[j];
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::vector<Vec> Subspace::annihilator() const { return null_space(basis_, dim_ambient_); }

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.dim_ambient_ != dim_ambient_) fail(ErrorKind::Dimension, "subspace intersection: ambient dimensions differ");
  // x in both  <=>  x is annihilated by both annihilators
  return Subspace(null_space(stack(annihilator(), other.annihilator()), dim_ambient_), dim_ambient_);
}

bool Subspace::includes(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& b) { return contains(b); });
}

Subspace lineality(const ConeSpace& space) {
  switch (space.kind()) {
    case ConeKind::Full: return Subspace::whole(space.dim());
    case ConeKind::Polyhedral: return Subspace(null_space(space.constraints(), space.dim()), space.dim());
    case ConeKind::Orthant:
    case ConeKind::StrictFirstCoordOrthant: return Subspace::zero(space.dim());
  }
  return Subspace::zero(space.dim());
}

bool subspace_member(const Subspace& s, const Vec& v) { return s.contains(v); }

// ---------------------------------------------------------------------------
// extreme rays

Vec primitive(const Vec& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  if (g == 0) fail(ErrorKind::Malformed, "primitive() of the zero vector");
  Vec out;
  for (const auto& n : ints) out.emplace_back(mpz_class(n / g));
  return out;
}

namespace {

bool satisfies(const Matrix& b, const Vec& y) {
  return std::all_of(b.begin(), b.end(), [&](const Vec& row) { return sgn(dot(row, y)) >= 0; });
}

// Calls f for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

}  // namespace

ConeGenerators cone_generators(const Matrix& b_in, std::size_t dim) {
  // drop zero rows and duplicate directions
  Matrix b;
  std::set<Vec> seen;
  for (const auto& row : b_in) {
    require_dim(row, dim, "cone_generators row");
    if (is_zero(row)) continue;
    Vec p = primitive(row);
    if (seen.insert(p).second) b.push_back(std::move(p));
  }

  ConeGenerators out;
  out.lineality = null_space(b, dim);
  const std::size_t d = dim - out.lineality.size();
  if (d == 0) return out;

  if (binomial(b.size(), d - 1) > 2e6)
    fail(ErrorKind::Unsupported, "cone too large for exact extreme-ray enumeration");

  std::set<Vec> rays;
  for_each_subset(b.size(), d - 1, [&](const std::vector<std::size_t>& subset) {
    Matrix sys = out.lineality;  // y orthogonal to the lineality space
    for (auto i : subset) sys.push_back(b[i]);
    if (rank(sys, dim) != dim - 1) return;
    Vec r = null_space(sys, dim).front();
    if (satisfies(b, r))
      rays.insert(primitive(r));
    else if (Vec neg = -r; satisfies(b, neg))
      rays.insert(primitive(neg));
  });
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

}  // namespace qnc
