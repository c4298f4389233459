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

#include "qnc/quotient.hpp"

namespace qnc {

/// Builds the quotient without checking Y ⊆ X or the nondegeneracy of p.
/// Used for kernels, whose subcone is only known to lie in the closure of X.
QuotientSpace make_quotient(const ConeSpace& x, const PLQuasiNorm& p, const ConeSpace& y, std::size_t budget);

}  // namespace qnc
