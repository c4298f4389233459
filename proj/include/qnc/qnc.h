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

#ifndef QNC_QNC_H
#define QNC_QNC_H

/*
 * C interface to the qnc library. Every function returns a status code;
 * on failure qnc_last_error() describes the violated precondition.
 * Strings returned through char** are owned by the caller and released
 * with qnc_string_free. Rationals travel as canonical strings ("p/q" or an
 * integer), vectors as comma-separated rationals, reports as JSON.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QNC_API __declspec(dllexport)
#else
#define QNC_API __attribute__((visibility("default")))
#endif

typedef enum qnc_status {
  QNC_OK = 0,
  QNC_ERR_DIMENSION = 1,
  QNC_ERR_NOT_MEMBER = 2,
  QNC_ERR_PRECONDITION = 3,
  QNC_ERR_UNSUPPORTED = 4,
  QNC_ERR_PARSE = 5,
  QNC_ERR_MALFORMED = 6,
  QNC_ERR_IO = 7,
  QNC_ERR_ARGUMENT = 8,
  QNC_ERR_INTERNAL = 9
} qnc_status;

typedef struct qnc_space qnc_space;
typedef struct qnc_norm qnc_norm;
typedef struct qnc_quotient qnc_quotient;
typedef struct qnc_map qnc_map;

QNC_API const char* qnc_version(void);
QNC_API const char* qnc_status_name(qnc_status status);
/* Message of the last failing call on this thread ("" if none). */
QNC_API const char* qnc_last_error(void);
QNC_API void qnc_string_free(char* s);

/* Cones: {"dim": n, "kind": "full" | "orthant" | "strict_first_orthant" | "polyhedral", "A": [[..]]} */
QNC_API qnc_status qnc_space_from_json(const char* json, qnc_space** out);
QNC_API qnc_status qnc_space_load(const char* path, qnc_space** out);
QNC_API void qnc_space_free(qnc_space* space);
QNC_API qnc_status qnc_space_dim(const qnc_space* space, size_t* out);
QNC_API qnc_status qnc_space_member(const qnc_space* space, const char* csv, int* out);
/* JSON array of basis vectors of the lineality space. */
QNC_API qnc_status qnc_space_lineality(const qnc_space* space, char** json_out);

/* Quasi-norms: {"M": [[..]], "dim": n, "wplus": [..], "wminus": [..]} */
QNC_API qnc_status qnc_norm_from_json(const char* json, qnc_norm** out);
QNC_API qnc_status qnc_norm_load(const char* path, qnc_norm** out);
QNC_API void qnc_norm_free(qnc_norm* norm);
QNC_API qnc_status qnc_norm_eval(const qnc_norm* norm, const char* csv, char** out);
/* d_p(from, to), or its symmetrisation; "inf" when infinite. */
QNC_API qnc_status qnc_dist(const qnc_space* space, const qnc_norm* norm, const char* from_csv, const char* to_csv,
                            int symmetric, char** out);

/* Quotient X/Y. falsifier_budget 0 skips the grid pre-pass. */
QNC_API qnc_status qnc_quotient_build(const qnc_space* space, const qnc_norm* norm, const qnc_space* subcone,
                                      size_t falsifier_budget, qnc_quotient** out);
/* {"space", "p", "subcone"}; members may be paths relative to the file. */
QNC_API qnc_status qnc_quotient_load(const char* desc_path, qnc_quotient** out);
QNC_API void qnc_quotient_free(qnc_quotient* qs);
/* "CLOSED" or "FALSIFIED witness=(..)". */
QNC_API qnc_status qnc_quotient_certificate(const qnc_quotient* qs, char** out);
QNC_API qnc_status qnc_quotient_describe(const qnc_quotient* qs, char** json_out);
/* {"rep": [..], "coordinates": [..]} */
QNC_API qnc_status qnc_quotient_class(const qnc_quotient* qs, const char* csv, char** json_out);
QNC_API qnc_status qnc_quotient_hatp(const qnc_quotient* qs, const char* csv, int allow_prenorm, char** out);
QNC_API qnc_status qnc_quotient_qdist(const qnc_quotient* qs, const char* x_csv, const char* y_csv,
                                      int allow_prenorm, char** out);
/* JSON array of {"functional", "norm"}. */
QNC_API qnc_status qnc_quotient_polar(const qnc_quotient* qs, char** json_out);

/* Maps: {"matrix", "source": {"space", "norm"}, "target": {..}}. base_dir
 * resolves relative paths and may be NULL. */
QNC_API qnc_status qnc_map_from_json(const char* json, const char* base_dir, qnc_map** out);
QNC_API qnc_status qnc_map_load(const char* path, qnc_map** out);
QNC_API void qnc_map_free(qnc_map* map);
QNC_API qnc_status qnc_map_opnorm(const qnc_map* map, char** out);
QNC_API qnc_status qnc_map_analyze(const qnc_map* map, char** json_out);
QNC_API qnc_status qnc_map_factorize(const qnc_map* map, char** json_out);

/* Compares two cost series given as CSV files with header "index,cost". */
QNC_API qnc_status qnc_complexity_compare_files(const char* a_path, const char* b_path, size_t n, char** json_out);

/* Runs every randomized property with `cases` cases each. */
QNC_API qnc_status qnc_check(uint64_t seed, size_t cases, char** json_out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* QNC_QNC_H */
