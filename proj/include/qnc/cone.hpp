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

// Ambient spaces, the four supported cone families, and linear subspaces.

#include <cstddef>
#include <string>
#include <vector>

#include "qnc/linalg.hpp"
#include "qnc/rational.hpp"

namespace qnc {

enum class ConeKind {
  Full,                     // the whole ambient space
  Polyhedral,               // {x : A x >= 0}
  Orthant,                  // {x : x >= 0}
  StrictFirstCoordOrthant,  // {x >= 0 : x_0 > 0} together with 0
};

std::string to_string(ConeKind kind);

/// A subcone of Q^dim described by one of the families above. Immutable.
class ConeSpace {
 public:
  static ConeSpace full(std::size_t dim);
  static ConeSpace orthant(std::size_t dim);
  static ConeSpace strict_first_orthant(std::size_t dim);
  /// Each row of `a` must have length `dim`. An empty `a` yields the whole space.
  static ConeSpace polyhedral(Matrix a, std::size_t dim);

  std::size_t dim() const { return dim_; }
  ConeKind kind() const { return kind_; }
  /// Defining matrix of a Polyhedral cone (empty for other families).
  const Matrix& constraints() const { return a_; }

  /// Rows a with {a.x >= 0 for all rows} equal to the topological closure.
  Matrix closure_constraints() const;
  bool is_strict() const { return kind_ == ConeKind::StrictFirstCoordOrthant; }

  friend bool operator==(const ConeSpace&, const ConeSpace&) = default;

 private:
  ConeSpace(std::size_t dim, ConeKind kind, Matrix a) : dim_(dim), kind_(kind), a_(std::move(a)) {}

  std::size_t dim_;
  ConeKind kind_;
  Matrix a_;
};

bool member(const ConeSpace& space, const Vec& v);

/// A linear subspace of Q^n given by a linearly independent basis.
class Subspace {
 public:
  /// Keeps a maximal independent subset of `spanning`, in order.
  Subspace(const std::vector<Vec>& spanning, std::size_t dim_ambient);

  static Subspace zero(std::size_t dim_ambient) { return Subspace({}, dim_ambient); }
  static Subspace whole(std::size_t dim_ambient);

  const std::vector<Vec>& basis() const { return basis_; }
  std::size_t dim_ambient() const { return dim_ambient_; }
  std::size_t dim() const { return basis_.size(); }

  bool contains(const Vec& v) const;

  /// Canonical coset representative of v + S: the unique element whose
  /// pivot coordinates (see pivot_columns) vanish.
  Vec reduce(const Vec& v) const;

  /// Columns killed by reduce(); one per basis vector.
  const std::vector<std::size_t>& pivot_columns() const { return echelon_.pivots; }
  /// The remaining coordinates, i.e. the coordinates of X/S.
  const std::vector<std::size_t>& complement_columns() const { return complement_; }

  /// Rows spanning the annihilator {h : h.s = 0 for s in S}.
  std::vector<Vec> annihilator() const;

  Subspace intersect(const Subspace& other) const;
  bool includes(const Subspace& other) const;

 private:
  std::vector<Vec> basis_;
  std::size_t dim_ambient_;
  Rref echelon_;
  std::vector<std::size_t> complement_;
};

Subspace lineality(const ConeSpace& space);
bool subspace_member(const Subspace& s, const Vec& v);

/// {y : B y >= 0} = span(lineality) + cone(rays), rays pointed and primitive
/// integral. Exact active-set enumeration; intended for desk-scale sizes.
struct ConeGenerators {
  std::vector<Vec> lineality;
  std::vector<Vec> rays;
};
ConeGenerators cone_generators(const Matrix& b, std::size_t dim);

/// Integer vector with coprime entries on the same ray as v (v != 0).
Vec primitive(const Vec& v);

}  // namespace qnc
