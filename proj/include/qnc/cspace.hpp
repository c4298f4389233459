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

// Cost functions of algorithms as points of the truncated dual complexity
// space: nonnegative sequences f(0..N-1) with p(f) = sum 2^-n f(n).

#include <cstddef>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "qnc/operators.hpp"
#include "qnc/rational.hpp"

namespace qnc {

constexpr std::size_t kDefaultTruncation = 32;

class ComplexityFunction {
 public:
  /// All values must be nonnegative.
  explicit ComplexityFunction(Vec values);
  static ComplexityFunction zero(std::size_t n) { return ComplexityFunction(zeros(n)); }

  std::size_t size() const { return values_.size(); }
  const Vec& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const ComplexityFunction&, const ComplexityFunction&) = default;

 private:
  Vec values_;
};

Rational cstar_norm(const ComplexityFunction& f);
/// sum 2^-n max(g(n) - f(n), 0)
Rational cstar_qmetric(const ComplexityFunction& f, const ComplexityFunction& g);
/// sum 2^-n (g(n) - f(n)) when f <= g pointwise, infinity otherwise.
ExtReal cstar_ep(const ComplexityFunction& f, const ComplexityFunction& g);

struct Ingested {
  ComplexityFunction function;
  std::vector<std::string> warnings;
};

/// Missing indices become 0 and produce one warning each.
Ingested ingest_series(const std::vector<std::pair<std::size_t, Rational>>& rows, std::size_t n = kDefaultTruncation);
/// CSV with header "index,cost"; costs are integers, decimals or p/q.
Ingested ingest_csv(std::istream& in, std::size_t n = kDefaultTruncation);

struct CompareReport {
  Rational d_fg;
  Rational d_gf;
  ExtReal e_fg;
  ExtReal e_gf;
  std::string verdict;  // "equivalent", "g improves on f", "f improves on g", "incomparable"
};

/// Text stating how the verdict is decided.
extern const char* const kVerdictConvention;

CompareReport compare(const ComplexityFunction& f, const ComplexityFunction& g);

/// The orthant of dimension n with p = sum 2^-i u(x_i).
NormedCone cstar_cone(std::size_t n);

/// F(f) = (f(0), 0, ..., 0) from ({f : f(0) > 0} ∪ {0}, q(f) = f(0)) to the
/// truncated space.
LinMap truncated_f(std::size_t n);
ComplexityFunction apply_f(const ComplexityFunction& f);

}  // namespace qnc
