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

#include "qnc/qnc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "qnc/check.hpp"
#include "qnc/cspace.hpp"
#include "qnc/error.hpp"
#include "serialize.hpp"

struct qnc_space {
  qnc::ConeSpace value;
};
struct qnc_norm {
  qnc::PLQuasiNorm value;
};
struct qnc_quotient {
  qnc::QuotientSpace value;
};
struct qnc_map {
  qnc::LinMap value;
};

namespace {

thread_local std::string last_error;

qnc_status status_of(qnc::ErrorKind kind) {
  switch (kind) {
    case qnc::ErrorKind::Dimension: return QNC_ERR_DIMENSION;
    case qnc::ErrorKind::NotMember: return QNC_ERR_NOT_MEMBER;
    case qnc::ErrorKind::Precondition: return QNC_ERR_PRECONDITION;
    case qnc::ErrorKind::Unsupported: return QNC_ERR_UNSUPPORTED;
    case qnc::ErrorKind::Parse: return QNC_ERR_PARSE;
    case qnc::ErrorKind::Malformed: return QNC_ERR_MALFORMED;
  }
  return QNC_ERR_INTERNAL;
}

template <class F>
qnc_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return QNC_OK;
  } catch (const qnc::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("invalid document: ") + e.what();
    return QNC_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QNC_ERR_INTERNAL;
  }
}

qnc_status argument_error(const char* what) {
  last_error = std::string("null argument: ") + what;
  return QNC_ERR_ARGUMENT;
}

#define QNC_REQUIRE(ptr) \
  if (!(ptr)) return argument_error(#ptr)

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::filesystem::path parent_of(const char* path) { return std::filesystem::path(path).parent_path(); }

}  // namespace

extern "C" {

const char* qnc_version(void) { return "1.0.0"; }

const char* qnc_status_name(qnc_status status) {
  switch (status) {
    case QNC_OK: return "ok";
    case QNC_ERR_DIMENSION: return "dimension mismatch";
    case QNC_ERR_NOT_MEMBER: return "not a member";
    case QNC_ERR_PRECONDITION: return "precondition failed";
    case QNC_ERR_UNSUPPORTED: return "unsupported";
    case QNC_ERR_PARSE: return "parse error";
    case QNC_ERR_MALFORMED: return "malformed input";
    case QNC_ERR_IO: return "i/o error";
    case QNC_ERR_ARGUMENT: return "invalid argument";
    case QNC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qnc_last_error(void) { return last_error.c_str(); }

void qnc_string_free(char* s) { std::free(s); }

// -- spaces --------------------------------------------------------------------

qnc_status qnc_space_from_json(const char* json, qnc_space** out) {
  QNC_REQUIRE(json);
  QNC_REQUIRE(out);
  return guarded([&] { *out = new qnc_space{qnc::space_from_json(qnc::parse_json(json))}; });
}

qnc_status qnc_space_load(const char* path, qnc_space** out) {
  QNC_REQUIRE(path);
  QNC_REQUIRE(out);
  return guarded([&] { *out = new qnc_space{qnc::space_from_json(qnc::load_json_file(path))}; });
}

void qnc_space_free(qnc_space* space) { delete space; }

qnc_status qnc_space_dim(const qnc_space* space, size_t* out) {
  QNC_REQUIRE(space);
  QNC_REQUIRE(out);
  *out = space->value.dim();
  return QNC_OK;
}

qnc_status qnc_space_member(const qnc_space* space, const char* csv, int* out) {
  QNC_REQUIRE(space);
  QNC_REQUIRE(csv);
  QNC_REQUIRE(out);
  return guarded([&] {
    const qnc::Vec v = qnc::parse_vec_csv(csv);
    qnc::require_dim(v, space->value.dim(), "member");
    *out = qnc::member(space->value, v) ? 1 : 0;
  });
}

qnc_status qnc_space_lineality(const qnc_space* space, char** json_out) {
  QNC_REQUIRE(space);
  QNC_REQUIRE(json_out);
  return guarded([&] { *json_out = dup(qnc::to_json(qnc::lineality(space->value).basis()).dump()); });
}

// -- norms -----------------------------------------------------------------------

qnc_status qnc_norm_from_json(const char* json, qnc_norm** out) {
  QNC_REQUIRE(json);
  QNC_REQUIRE(out);
  return guarded([&] { *out = new qnc_norm{qnc::norm_from_json(qnc::parse_json(json))}; });
}

qnc_status qnc_norm_load(const char* path, qnc_norm** out) {
  QNC_REQUIRE(path);
  QNC_REQUIRE(out);
  return guarded([&] { *out = new qnc_norm{qnc::norm_from_json(qnc::load_json_file(path))}; });
}

void qnc_norm_free(qnc_norm* norm) { delete norm; }

qnc_status qnc_norm_eval(const qnc_norm* norm, const char* csv, char** out) {
  QNC_REQUIRE(norm);
  QNC_REQUIRE(csv);
  QNC_REQUIRE(out);
  return guarded([&] { *out = dup(qnc::to_string(norm->value(qnc::parse_vec_csv(csv)))); });
}

qnc_status qnc_dist(const qnc_space* space, const qnc_norm* norm, const char* from_csv, const char* to_csv,
                    int symmetric, char** out) {
  QNC_REQUIRE(space);
  QNC_REQUIRE(norm);
  QNC_REQUIRE(from_csv);
  QNC_REQUIRE(to_csv);
  QNC_REQUIRE(out);
  return guarded([&] {
    const qnc::Vec x = qnc::parse_vec_csv(from_csv), y = qnc::parse_vec_csv(to_csv);
    const qnc::ExtReal d = symmetric ? qnc::sym_metric(norm->value, space->value, x, y)
                                     : qnc::qmetric(norm->value, space->value, x, y);
    *out = dup(qnc::to_string(d));
  });
}

// -- quotients -------------------------------------------------------------------

qnc_status qnc_quotient_build(const qnc_space* space, const qnc_norm* norm, const qnc_space* subcone,
                              size_t falsifier_budget, qnc_quotient** out) {
  QNC_REQUIRE(space);
  QNC_REQUIRE(norm);
  QNC_REQUIRE(subcone);
  QNC_REQUIRE(out);
  return guarded([&] {
    *out = new qnc_quotient{qnc::build_quotient(space->value, norm->value, subcone->value, falsifier_budget)};
  });
}

qnc_status qnc_quotient_load(const char* desc_path, qnc_quotient** out) {
  QNC_REQUIRE(desc_path);
  QNC_REQUIRE(out);
  return guarded([&] {
    const auto d = qnc::quotient_description_from_json(qnc::load_json_file(desc_path), parent_of(desc_path));
    *out = new qnc_quotient{qnc::build_quotient(d.space, d.p, d.subcone)};
  });
}

void qnc_quotient_free(qnc_quotient* qs) { delete qs; }

qnc_status qnc_quotient_certificate(const qnc_quotient* qs, char** out) {
  QNC_REQUIRE(qs);
  QNC_REQUIRE(out);
  return guarded([&] { *out = dup(qnc::to_string(qs->value.certificate())); });
}

qnc_status qnc_quotient_describe(const qnc_quotient* qs, char** json_out) {
  QNC_REQUIRE(qs);
  QNC_REQUIRE(json_out);
  return guarded([&] { *json_out = dup(qnc::describe(qs->value).dump(2)); });
}

qnc_status qnc_quotient_class(const qnc_quotient* qs, const char* csv, char** json_out) {
  QNC_REQUIRE(qs);
  QNC_REQUIRE(csv);
  QNC_REQUIRE(json_out);
  return guarded([&] {
    const qnc::QuotientClass c = qnc::class_of(qs->value, qnc::parse_vec_csv(csv));
    qnc::Json j;
    j["rep"] = qnc::to_json(c.rep());
    j["coordinates"] = qnc::to_json(qnc::class_coordinates(c));
    *json_out = dup(j.dump());
  });
}

qnc_status qnc_quotient_hatp(const qnc_quotient* qs, const char* csv, int allow_prenorm, char** out) {
  QNC_REQUIRE(qs);
  QNC_REQUIRE(csv);
  QNC_REQUIRE(out);
  return guarded([&] {
    const qnc::QuotientClass c = qnc::class_of(qs->value, qnc::parse_vec_csv(csv));
    *out = dup(qnc::to_string(qnc::hat_p(qs->value, c, allow_prenorm != 0)));
  });
}

qnc_status qnc_quotient_qdist(const qnc_quotient* qs, const char* x_csv, const char* y_csv, int allow_prenorm,
                              char** out) {
  QNC_REQUIRE(qs);
  QNC_REQUIRE(x_csv);
  QNC_REQUIRE(y_csv);
  QNC_REQUIRE(out);
  return guarded([&] {
    const qnc::QuotientClass a = qnc::class_of(qs->value, qnc::parse_vec_csv(x_csv));
    const qnc::QuotientClass b = qnc::class_of(qs->value, qnc::parse_vec_csv(y_csv));
    *out = dup(qnc::to_string(qnc::quotient_qmetric(qs->value, a, b, allow_prenorm != 0)));
  });
}

qnc_status qnc_quotient_polar(const qnc_quotient* qs, char** json_out) {
  QNC_REQUIRE(qs);
  QNC_REQUIRE(json_out);
  return guarded([&] { *json_out = dup(qnc::to_json(qnc::polar(qs->value)).dump(2)); });
}

// -- maps ----------------------------------------------------------------------------

qnc_status qnc_map_from_json(const char* json, const char* base_dir, qnc_map** out) {
  QNC_REQUIRE(json);
  QNC_REQUIRE(out);
  return guarded([&] {
    const std::filesystem::path base = base_dir ? std::filesystem::path(base_dir) : std::filesystem::path();
    *out = new qnc_map{qnc::map_from_json(qnc::parse_json(json), base)};
  });
}

qnc_status qnc_map_load(const char* path, qnc_map** out) {
  QNC_REQUIRE(path);
  QNC_REQUIRE(out);
  return guarded([&] { *out = new qnc_map{qnc::map_from_json(qnc::load_json_file(path), parent_of(path))}; });
}

void qnc_map_free(qnc_map* map) { delete map; }

qnc_status qnc_map_opnorm(const qnc_map* map, char** out) {
  QNC_REQUIRE(map);
  QNC_REQUIRE(out);
  return guarded([&] { *out = dup(qnc::to_string(map->value.norm())); });
}

qnc_status qnc_map_analyze(const qnc_map* map, char** json_out) {
  QNC_REQUIRE(map);
  QNC_REQUIRE(json_out);
  return guarded([&] { *json_out = dup(qnc::to_json(qnc::analyze(map->value)).dump(2)); });
}

qnc_status qnc_map_factorize(const qnc_map* map, char** json_out) {
  QNC_REQUIRE(map);
  QNC_REQUIRE(json_out);
  return guarded([&] { *json_out = dup(qnc::to_json(qnc::factorize(map->value)).dump(2)); });
}

// -- complexity space ---------------------------------------------------------------

qnc_status qnc_complexity_compare_files(const char* a_path, const char* b_path, size_t n, char** json_out) {
  QNC_REQUIRE(a_path);
  QNC_REQUIRE(b_path);
  QNC_REQUIRE(json_out);
  if (n == 0) return argument_error("n must be positive");
  std::ifstream a(a_path), b(b_path);
  if (!a || !b) {
    last_error = std::string("cannot open ") + (a ? b_path : a_path);
    return QNC_ERR_IO;
  }
  return guarded([&] {
    const qnc::Ingested fa = qnc::ingest_csv(a, n);
    const qnc::Ingested fb = qnc::ingest_csv(b, n);
    qnc::Json j = qnc::to_json(qnc::compare(fa.function, fb.function));
    qnc::Json warnings = qnc::Json::array();
    for (const auto& w : fa.warnings) warnings.push_back(std::string("a: ") + w);
    for (const auto& w : fb.warnings) warnings.push_back(std::string("b: ") + w);
    j["warnings"] = warnings;
    *json_out = dup(j.dump(2));
  });
}

// -- invariant suite -------------------------------------------------------------

qnc_status qnc_check(uint64_t seed, size_t cases, char** json_out, int* all_passed) {
  QNC_REQUIRE(json_out);
  QNC_REQUIRE(all_passed);
  return guarded([&] {
    qnc::Json props = qnc::Json::array();
    bool ok = true;
    for (const auto& r : qnc::run_property_suite(seed, cases)) {
      ok = ok && r.passed();
      qnc::Json j;
      j["name"] = r.name;
      j["cases"] = r.cases;
      j["failures"] = r.failures;
      if (!r.passed()) j["first_failure"] = r.first_failure;
      props.push_back(j);
    }
    qnc::Json j;
    j["seed"] = seed;
    j["cases"] = cases;
    j["passed"] = ok;
    j["properties"] = props;
    *json_out = dup(j.dump(2));
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
