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

#include <initializer_list>

#include "qnc/rational.hpp"

namespace qnc::test {

inline Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Matrix m(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix out;
  for (auto r : rows) out.push_back(v(r));
  return out;
}

inline Rational q(const char* text) { return parse_rational(text); }

}  // namespace qnc::test
