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

// JSON documents for cones, quasi-norms, maps and reports.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qnc/cspace.hpp"
#include "qnc/operators.hpp"
#include "qnc/quotient.hpp"

namespace qnc {

using Json = nlohmann::ordered_json;

Json load_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
Json to_json(const ExtReal& e);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);

ConeSpace space_from_json(const Json& j);
Json to_json(const ConeSpace& s);

PLQuasiNorm norm_from_json(const Json& j);
Json to_json(const PLQuasiNorm& p);

struct QuotientDescription {
  ConeSpace space;
  PLQuasiNorm p;
  ConeSpace subcone;
};
/// {"space": .., "p": .., "subcone": ..}; members may be file paths
/// relative to base_dir.
QuotientDescription quotient_description_from_json(const Json& j, const std::filesystem::path& base_dir);
Json describe(const QuotientSpace& qs);

/// {"matrix": .., "source": {"space", "norm"}, "target": ..}; any object may
/// be replaced by a path relative to base_dir.
LinMap map_from_json(const Json& j, const std::filesystem::path& base_dir);

Json to_json(const InjectivityResult& r);
Json to_json(const Openness& o);
Json to_json(const Factorization& f);
Json to_json(const AnalysisReport& r);
Json to_json(const CompareReport& r);
Json to_json(const std::vector<DualElement>& generators);

}  // namespace qnc
