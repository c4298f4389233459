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

#include "serialize.hpp"

#include <fstream>
#include <sstream>

#include "qnc/error.hpp"

namespace qnc {

namespace fs = std::filesystem;

Json load_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const Error& e) {
    fail(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) fail(ErrorKind::Parse, "floating point number " + j.dump() + " (write it as a string)");
  fail(ErrorKind::Parse, "expected a rational, got " + j.dump());
}

Json to_json(const Rational& r) { return to_string(r); }
Json to_json(const ExtReal& e) { return to_string(e); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

namespace {

const Json& field(const Json& j, const char* name, const char* what) {
  if (!j.is_object()) fail(ErrorKind::Parse, std::string(what) + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(ErrorKind::Parse, std::string(what) + ": missing field \"" + name + "\"");
  return *it;
}

Vec vec_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::Parse, std::string(what) + ": expected an array");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Matrix matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::Parse, std::string(what) + ": expected an array of rows");
  Matrix m;
  for (const auto& row : j) m.push_back(vec_from_json(row, what));
  for (const auto& row : m)
    if (row.size() != m.front().size()) fail(ErrorKind::Parse, std::string(what) + ": rows of different length");
  return m;
}

std::size_t dim_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0)
    fail(ErrorKind::Parse, std::string(what) + ": dimension must be a positive integer");
  return j.get<std::size_t>();
}

// An inline object, or a string naming a JSON file relative to base_dir.
Json resolve(const Json& j, const fs::path& base_dir) {
  if (j.is_string()) {
    fs::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return load_json_file(p);
  }
  return j;
}

}  // namespace

ConeSpace space_from_json(const Json& j) {
  const std::size_t dim = dim_from_json(field(j, "dim", "cone"), "cone");
  const std::string kind = field(j, "kind", "cone").get<std::string>();
  if (kind == "full") return ConeSpace::full(dim);
  if (kind == "orthant") return ConeSpace::orthant(dim);
  if (kind == "strict_first_orthant") return ConeSpace::strict_first_orthant(dim);
  if (kind == "polyhedral") {
    Matrix a = matrix_from_json(field(j, "A", "polyhedral cone"), "polyhedral cone A");
    for (const auto& row : a)
      if (row.size() != dim) fail(ErrorKind::Parse, "polyhedral cone: rows of A must have length dim");
    return ConeSpace::polyhedral(std::move(a), dim);
  }
  fail(ErrorKind::Parse, "cone: unknown kind \"" + kind + "\"");
}

Json to_json(const ConeSpace& s) {
  Json j;
  j["dim"] = s.dim();
  j["kind"] = to_string(s.kind());
  if (s.kind() == ConeKind::Polyhedral) j["A"] = to_json(s.constraints());
  return j;
}

PLQuasiNorm norm_from_json(const Json& j) {
  const Vec wplus = vec_from_json(field(j, "wplus", "quasi-norm"), "wplus");
  const Vec wminus = vec_from_json(field(j, "wminus", "quasi-norm"), "wminus");
  if (wplus.size() != wminus.size()) fail(ErrorKind::Parse, "quasi-norm: wplus and wminus differ in length");
  if (!j.contains("M")) {
    if (wplus.empty()) fail(ErrorKind::Parse, "quasi-norm: empty weights");
    return PLQuasiNorm(wplus, wminus);
  }
  Matrix m = matrix_from_json(j["M"], "quasi-norm M");
  if (m.size() != wplus.size()) fail(ErrorKind::Parse, "quasi-norm: M needs one row per weight");
  std::size_t dim = m.empty() ? 0 : m.front().size();
  if (j.contains("dim")) {
    const std::size_t d = dim_from_json(j["dim"], "quasi-norm");
    if (!m.empty() && d != dim) fail(ErrorKind::Parse, "quasi-norm: dim disagrees with M");
    dim = d;
  }
  if (dim == 0) fail(ErrorKind::Parse, "quasi-norm: dimension unknown (give \"dim\")");
  return PLQuasiNorm(std::move(m), wplus, wminus, dim);
}

Json to_json(const PLQuasiNorm& p) {
  Json j;
  if (!(p.rows() == p.dim() && p.matrix() == identity(p.dim()))) {
    j["M"] = to_json(p.matrix());
    j["dim"] = p.dim();
  }
  j["wplus"] = to_json(p.wplus());
  j["wminus"] = to_json(p.wminus());
  return j;
}

QuotientDescription quotient_description_from_json(const Json& j, const fs::path& base_dir) {
  return {space_from_json(resolve(field(j, "space", "quotient description"), base_dir)),
          norm_from_json(resolve(field(j, "p", "quotient description"), base_dir)),
          space_from_json(resolve(field(j, "subcone", "quotient description"), base_dir))};
}

Json describe(const QuotientSpace& qs) {
  Json j;
  j["space"] = to_json(qs.space());
  j["p"] = to_json(qs.norm());
  j["subcone"] = to_json(qs.subcone());
  j["G_basis"] = to_json(Matrix(qs.g().basis()));
  j["certificate"] = to_string(qs.certificate());
  if (const auto* f = std::get_if<Falsified>(&qs.certificate())) j["witness"] = to_json(f->witness);
  Json cols = Json::array();
  for (auto c : qs.g().complement_columns()) cols.push_back(c);
  j["coordinate_columns"] = cols;
  return j;
}

namespace {

NormedCone normed_cone_from_json(const Json& j, const fs::path& base_dir, const char* what) {
  const Json obj = resolve(j, base_dir);
  return {space_from_json(resolve(field(obj, "space", what), base_dir)),
          norm_from_json(resolve(field(obj, "norm", what), base_dir))};
}

}  // namespace

LinMap map_from_json(const Json& j, const fs::path& base_dir) {
  Matrix m = matrix_from_json(field(j, "matrix", "map"), "map matrix");
  NormedCone source = normed_cone_from_json(field(j, "source", "map"), base_dir, "map source");
  NormedCone target = normed_cone_from_json(field(j, "target", "map"), base_dir, "map target");
  if (m.size() != target.space.dim()) fail(ErrorKind::Dimension, "map: matrix needs one row per target coordinate");
  for (const auto& row : m)
    if (row.size() != source.space.dim()) fail(ErrorKind::Dimension, "map: matrix rows must have the source dimension");
  return LinMap(std::move(m), std::move(source), std::move(target));
}

Json to_json(const InjectivityResult& r) {
  Json j;
  j["holds"] = r.yes;
  if (r.witness) j["witness"] = Json::array({to_json(r.witness->first), to_json(r.witness->second)});
  return j;
}

Json to_json(const Openness& o) {
  Json j;
  j["open"] = o.open;
  if (o.open)
    j["M"] = to_json(o.m);
  else
    j["reason"] = o.reason;
  return j;
}

Json to_json(const Factorization& f) {
  Json j;
  j["quotient"] = describe(f.qs);
  j["T_tilde"] = to_json(f.t_tilde);
  j["norm_T"] = to_json(f.norm_t);
  j["norm_T_tilde"] = to_json(f.norm_t_tilde);
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["continuous"] = r.continuous;
  j["norm"] = to_json(r.norm);
  j["p_injective"] = to_json(r.p_injective);
  j["G_injective"] = to_json(r.g_injective);
  j["openness_M"] = to_json(r.openness);
  if (r.factorization) {
    j["factorization_norms"] = Json::array({to_json(r.factorization->norm_t), to_json(r.factorization->norm_t_tilde)});
  } else {
    j["factorization_norms"] = nullptr;
    j["factorization_error"] = r.factorization_error;
  }
  return j;
}

Json to_json(const CompareReport& r) {
  Json j;
  j["d_fg"] = to_json(r.d_fg);
  j["d_gf"] = to_json(r.d_gf);
  j["e_fg"] = to_json(r.e_fg);
  j["e_gf"] = to_json(r.e_gf);
  j["verdict"] = r.verdict;
  j["convention"] = kVerdictConvention;
  return j;
}

Json to_json(const std::vector<DualElement>& generators) {
  Json j = Json::array();
  for (const auto& g : generators) j.push_back({{"functional", to_json(g.functional)}, {"norm", to_json(g.norm)}});
  return j;
}

}  // namespace qnc
