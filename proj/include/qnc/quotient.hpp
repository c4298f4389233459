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

// The quotient cone X/Y: classes x + G_Y, the infimum functional p-hat, the
// induced quasi-metric, and the exact closedness decision for G_Y.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qnc/cone.hpp"
#include "qnc/qnorm.hpp"
#include "qnc/rational.hpp"

namespace qnc {

struct CertifiedClosed {};
struct Falsified {
  Vec witness;  // x in X, x not in G, inf_g d_p(x, g) = 0
};
struct Unknown {};
using ClosedCertificate = std::variant<CertifiedClosed, Falsified, Unknown>;

/// "CLOSED", "FALSIFIED witness=(..)" or "UNKNOWN".
std::string to_string(const ClosedCertificate& c);

constexpr std::size_t kDefaultFalsifierBudget = 64;

class QuotientSpace {
 public:
  const ConeSpace& space() const { return impl_->x; }
  const PLQuasiNorm& norm() const { return impl_->p; }
  const ConeSpace& subcone() const { return impl_->y; }
  const Subspace& g() const { return impl_->g; }
  const ClosedCertificate& certificate() const { return impl_->certificate; }
  bool certified_closed() const { return std::holds_alternative<CertifiedClosed>(impl_->certificate); }

  /// Number of class coordinates (the complement columns of G).
  std::size_t quotient_dim() const { return impl_->g.complement_columns().size(); }

  bool same_as(const QuotientSpace& other) const { return impl_ == other.impl_; }

 private:
  struct Impl {
    ConeSpace x;
    PLQuasiNorm p;
    ConeSpace y;
    Subspace g;
    ClosedCertificate certificate;
  };
  explicit QuotientSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend QuotientSpace make_quotient(const ConeSpace&, const PLQuasiNorm&, const ConeSpace&, std::size_t);
};

/// Checks Y ⊆ X and the nondegeneracy of p, computes G = lineality(Y) and
/// decides whether G is closed in T(d_p).
QuotientSpace build_quotient(const ConeSpace& x, const PLQuasiNorm& p, const ConeSpace& y,
                             std::size_t budget = kDefaultFalsifierBudget);

/// A point x of X with x not in G and d_p(x, G) = 0, if one exists. A
/// deterministic search over at most `budget` integer points runs first;
/// the exact decision follows, so nullopt means G is closed.
std::optional<Vec> falsify_closedness(const QuotientSpace& qs, std::size_t budget = kDefaultFalsifierBudget);

class QuotientClass {
 public:
  const Vec& rep() const { return rep_; }
  const QuotientSpace& space() const { return qs_; }

  friend bool operator==(const QuotientClass& a, const QuotientClass& b) {
    return a.qs_.same_as(b.qs_) && a.rep_ == b.rep_;
  }

 private:
  QuotientClass(QuotientSpace qs, Vec rep) : qs_(std::move(qs)), rep_(std::move(rep)) {}
  QuotientSpace qs_;
  Vec rep_;

  friend QuotientClass class_of(const QuotientSpace&, const Vec&);
  friend QuotientClass class_add(const QuotientClass&, const QuotientClass&);
  friend QuotientClass class_scale(const Rational&, const QuotientClass&);
};

/// phi(x) = [x]. The representative vanishes on the pivot columns of G.
QuotientClass class_of(const QuotientSpace& qs, const Vec& x);
QuotientClass class_add(const QuotientClass& a, const QuotientClass& b);
/// r >= 0
QuotientClass class_scale(const Rational& r, const QuotientClass& a);

/// Representative restricted to the complement columns.
Vec class_coordinates(const QuotientClass& c);
/// Vector of the ambient space with the given complement coordinates and
/// zeros on the pivot columns.
Vec embed_coordinates(const QuotientSpace& qs, const Vec& coords);

/// inf { p(x + g) : g in G }. Requires a closed certificate unless
/// allow_prenorm is set.
Rational hat_p(const QuotientSpace& qs, const QuotientClass& c, bool allow_prenorm = false);

/// d_{p-hat}(a, b): p-hat of the class b - a when it lies in X/Y, else inf.
ExtReal quotient_qmetric(const QuotientSpace& qs, const QuotientClass& a, const QuotientClass& b,
                         bool allow_prenorm = false);

// -- finite checks along sequences ------------------------------------------

/// x_n = (2 - 1/n, 2 - 1/n), n = 1..count.
std::vector<Vec> diagonal_sequence(std::size_t count);

struct CauchyReport {
  bool cauchy = false;
  std::size_t n0 = 0;  // 1-based index from which the tail is eps-close
  Rational tail_diameter;
};

/// Finite-prefix Cauchy test in d^s: some n0 <= count/2 with
/// d^s(x_n, x_m) < eps for all n, m >= n0.
/// tail[i] = sup of d^s over pairs of indices both >= i (0-based); the
/// last entry is 0. Computing it once serves every eps.
struct CauchyProfile {
  std::vector<ExtReal> tail;
};
CauchyProfile cauchy_profile(const PLQuasiNorm& p, const ConeSpace& space, const std::vector<Vec>& seq);
CauchyReport check_cauchy(const CauchyProfile& profile, const Rational& eps);
CauchyReport check_cauchy(const PLQuasiNorm& p, const ConeSpace& space, const std::vector<Vec>& seq,
                          const Rational& eps);

/// d_{p-hat}([x_n],[x_m]) <= d_p(x_n,x_m) for consecutive pairs and for
/// pairs with the last element, in both directions. Returns the first
/// failing pair (0-based) or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> check_domination(const QuotientSpace& qs,
                                                                    const std::vector<Vec>& seq,
                                                                    bool allow_prenorm = false);

}  // namespace qnc
