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

// Exact scalars, vectors and matrices. Every value in the library is an
// exact rational; nothing in the core ever rounds.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qnc {

using Rational = mpq_class;
using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;  // row-major, every row the same length

/// Canonical text form: lowest terms, "p/q" or a bare integer.
std::string to_string(const Rational& r);

/// Parses integers ("-3"), fractions ("7/2") and plain decimals ("0.125",
/// "-1.5e2"). Decimals are converted exactly.
Rational parse_rational(std::string_view text);

/// Comma separated rationals, e.g. "2,-3/2,0.5".
Vec parse_vec_csv(std::string_view text);

/// "(2,3/2)".
std::string to_string(const Vec& v);

/// Nonnegative exact rational or +infinity. Distances live here.
class ExtReal {
 public:
  ExtReal() : value_(Rational(0)) {}
  ExtReal(Rational value);  // NOLINT(google-explicit-constructor)
  ExtReal(long value) : ExtReal(Rational(value)) {}  // NOLINT

  static ExtReal infinity() {
    ExtReal e;
    e.value_.reset();
    return e;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  const Rational& value() const;

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  /// r >= 0. r * inf = inf for r > 0 and 0 * inf = 0.
  friend ExtReal operator*(const Rational& r, const ExtReal& a);

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

 private:
  std::optional<Rational> value_;
};

/// "inf" or the canonical rational.
std::string to_string(const ExtReal& e);
std::ostream& operator<<(std::ostream& os, const ExtReal& e);

ExtReal max(const ExtReal& a, const ExtReal& b);

// Vector helpers. All of them check dimensions.
Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& r, const Vec& a);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

Matrix identity(std::size_t n);
Matrix zero_matrix(std::size_t rows, std::size_t cols);
std::size_t cols_of(const Matrix& m, std::size_t fallback = 0);
Vec operator*(const Matrix& m, const Vec& v);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m, std::size_t cols_if_empty = 0);
/// Rows of `a` followed by rows of `b`.
Matrix stack(const Matrix& a, const Matrix& b);

void require_dim(const Vec& v, std::size_t dim, const char* what);

}  // namespace qnc
