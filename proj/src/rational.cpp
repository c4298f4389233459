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

#include "qnc/rational.hpp"

#include <cctype>
#include <sstream>

#include "qnc/error.hpp"

namespace qnc {

std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(ErrorKind::Parse, "not a rational: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) fail(ErrorKind::Parse, "empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)), s);
    mpz_class den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(s) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  // decimal with optional exponent
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    mpz_class ez = parse_integer(s.substr(e + 1), s);
    if (!ez.fits_slong_p() || abs(ez) > 4096) fail(ErrorKind::Parse, "exponent out of range in '" + std::string(s) + "'");
    exponent = ez.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      fail(ErrorKind::Parse, "not a rational: '" + std::string(s) + "'");
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) fail(ErrorKind::Parse, "not a rational: '" + std::string(s) + "'");
    digits = std::string(mantissa);
  }
  Rational r{mpz_class(digits, 10)};
  const long shift = exponent - frac_digits;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0)
    r *= ten_pow;
  else
    r /= ten_pow;
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Vec parse_vec_csv(std::string_view text) {
  Vec out;
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (trim(s).empty()) fail(ErrorKind::Parse, "empty vector");
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_rational(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// ExtReal

ExtReal::ExtReal(Rational value) : value_(std::move(value)) {
  value_->canonicalize();
  if (sgn(*value_) < 0) fail(ErrorKind::Malformed, "extended reals are nonnegative, got " + to_string(*value_));
}

const Rational& ExtReal::value() const {
  if (!value_) fail(ErrorKind::Precondition, "value() of an infinite extended real");
  return *value_;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtReal::infinity();
  return ExtReal(Rational(*a.value_ + *b.value_));
}

ExtReal operator*(const Rational& r, const ExtReal& a) {
  if (sgn(r) < 0) fail(ErrorKind::Precondition, "extended reals scale by nonnegative rationals only");
  if (sgn(r) == 0) return ExtReal();
  if (a.is_infinite()) return a;
  return ExtReal(Rational(r * *a.value_));
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  const int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const ExtReal& e) { return e.is_infinite() ? "inf" : to_string(e.value()); }

std::ostream& operator<<(std::ostream& os, const ExtReal& e) { return os << to_string(e); }

ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------
// vectors / matrices

void require_dim(const Vec& v, std::size_t dim, const char* what) {
  if (v.size() != dim) {
    std::ostringstream os;
    os << what << ": expected dimension " << dim << ", got " << v.size();
    fail(ErrorKind::Dimension, os.str());
  }
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v.at(i) = 1;
  return v;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_dim(b, a.size(), "vector sum");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_dim(b, a.size(), "vector difference");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator-(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vec operator*(const Rational& r, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r * a[i];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  require_dim(b, a.size(), "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix identity(std::size_t n) {
  Matrix m(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, zeros(cols)); }

std::size_t cols_of(const Matrix& m, std::size_t fallback) { return m.empty() ? fallback : m.front().size(); }

Vec operator*(const Matrix& m, const Vec& v) {
  Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = a.front().size();
  if (b.size() != inner) fail(ErrorKind::Dimension, "matrix product: inner dimensions differ");
  const std::size_t cols = cols_of(b);
  Matrix out = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix transpose(const Matrix& m, std::size_t cols_if_empty) {
  const std::size_t cols = cols_of(m, cols_if_empty);
  Matrix out = zero_matrix(cols, m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
  return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace qnc
