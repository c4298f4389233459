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

#include "qnc/cspace.hpp"

#include <algorithm>
#include <sstream>

#include "qnc/error.hpp"

namespace qnc {

namespace {

Rational dyadic(std::size_t n) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(n);
  return Rational(mpz_class(1), den);
}

void same_length(const ComplexityFunction& f, const ComplexityFunction& g) {
  if (f.size() != g.size())
    fail(ErrorKind::Dimension, "complexity functions have different lengths (" + std::to_string(f.size()) + " and " +
                                   std::to_string(g.size()) + ")");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ComplexityFunction::ComplexityFunction(Vec values) : values_(std::move(values)) {
  if (values_.empty()) fail(ErrorKind::Malformed, "complexity function needs at least one value");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (sgn(values_[i]) < 0) fail(ErrorKind::Precondition, "negative cost at index " + std::to_string(i));
}

Rational cstar_norm(const ComplexityFunction& f) {
  Rational s = 0;
  for (std::size_t n = 0; n < f.size(); ++n) s += dyadic(n) * f[n];
  return s;
}

Rational cstar_qmetric(const ComplexityFunction& f, const ComplexityFunction& g) {
  same_length(f, g);
  Rational s = 0;
  for (std::size_t n = 0; n < f.size(); ++n)
    if (g[n] > f[n]) s += dyadic(n) * (g[n] - f[n]);
  return s;
}

ExtReal cstar_ep(const ComplexityFunction& f, const ComplexityFunction& g) {
  same_length(f, g);
  Rational s = 0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (f[n] > g[n]) return ExtReal::infinity();
    s += dyadic(n) * (g[n] - f[n]);
  }
  return ExtReal(s);
}

Ingested ingest_series(const std::vector<std::pair<std::size_t, Rational>>& rows, std::size_t n) {
  if (n == 0) fail(ErrorKind::Precondition, "truncation length must be positive");
  Vec values = zeros(n);
  std::vector<bool> seen(n, false);
  for (const auto& [index, cost] : rows) {
    if (index >= n)
      fail(ErrorKind::Precondition, "index " + std::to_string(index) + " is outside 0.." + std::to_string(n - 1));
    if (seen[index]) fail(ErrorKind::Precondition, "duplicate index " + std::to_string(index));
    if (sgn(cost) < 0) fail(ErrorKind::Precondition, "negative cost at index " + std::to_string(index));
    seen[index] = true;
    values[index] = cost;
  }
  Ingested out{ComplexityFunction(std::move(values)), {}};
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) out.warnings.push_back("index " + std::to_string(i) + " missing, filled with 0");
  return out;
}

Ingested ingest_csv(std::istream& in, std::size_t n) {
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<std::pair<std::size_t, Rational>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
      fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected two comma separated fields");
    const std::string a = trim(t.substr(0, comma));
    const std::string b = trim(t.substr(comma + 1));
    if (!header) {
      if (a != "index" || b != "cost") fail(ErrorKind::Parse, "missing header line \"index,cost\"");
      header = true;
      continue;
    }
    if (a.empty() || !std::all_of(a.begin(), a.end(), [](char c) { return c >= '0' && c <= '9'; }))
      fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": index must be a nonnegative integer");
    rows.emplace_back(std::stoul(a), parse_rational(b));
  }
  if (!header) fail(ErrorKind::Parse, "missing header line \"index,cost\"");
  return ingest_series(rows, n);
}

const char* const kVerdictConvention =
    "g improves on f iff g <= f pointwise, i.e. e_p(g,f) is finite, equivalently d(f,g) = 0";

CompareReport compare(const ComplexityFunction& f, const ComplexityFunction& g) {
  CompareReport r{cstar_qmetric(f, g), cstar_qmetric(g, f), cstar_ep(f, g), cstar_ep(g, f), ""};
  if (f == g)
    r.verdict = "equivalent";
  else if (r.e_gf.is_finite())
    r.verdict = "g improves on f";
  else if (r.e_fg.is_finite())
    r.verdict = "f improves on g";
  else
    r.verdict = "incomparable";
  return r;
}

NormedCone cstar_cone(std::size_t n) {
  Vec w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(dyadic(i));
  return {ConeSpace::orthant(n), PLQuasiNorm(w, zeros(n))};
}

LinMap truncated_f(std::size_t n) {
  Matrix f = zero_matrix(n, n);
  f[0][0] = 1;
  const NormedCone source{ConeSpace::strict_first_orthant(n), PLQuasiNorm({unit(n, 0)}, {1}, {0}, n)};
  return LinMap(std::move(f), source, cstar_cone(n));
}

ComplexityFunction apply_f(const ComplexityFunction& f) {
  Vec v = zeros(f.size());
  v[0] = f[0];
  return ComplexityFunction(std::move(v));
}

}  // namespace qnc
