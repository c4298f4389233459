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

/* Exercises the C interface from plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "qnc/qnc.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void expect_string(char* s, const char* want) {
  EXPECT(s != NULL && strcmp(s, want) == 0);
  if (s && strcmp(s, want) != 0) fprintf(stderr, "  got \"%s\", want \"%s\"\n", s, want);
  qnc_string_free(s);
}

int main(void) {
  qnc_space* plane = NULL;
  qnc_space* diag = NULL;
  qnc_space* axis = NULL;
  qnc_norm* uu = NULL;
  qnc_norm* mixed = NULL;
  qnc_quotient* ex7 = NULL;
  qnc_quotient* closed = NULL;
  qnc_map* map = NULL;
  char* out = NULL;
  int flag = -1;
  size_t dim = 0;

  EXPECT(qnc_space_from_json("{\"dim\": 2, \"kind\": \"full\"}", &plane) == QNC_OK);
  EXPECT(qnc_space_from_json("{\"dim\": 2, \"kind\": \"polyhedral\", \"A\": [[1,-1],[-1,1]]}", &diag) == QNC_OK);
  EXPECT(qnc_space_from_json("{\"dim\": 2, \"kind\": \"polyhedral\", \"A\": [[0,1],[0,-1]]}", &axis) == QNC_OK);
  EXPECT(qnc_norm_from_json("{\"wplus\": [1,1], \"wminus\": [0,0]}", &uu) == QNC_OK);
  EXPECT(qnc_norm_from_json("{\"wplus\": [1,1], \"wminus\": [0,1]}", &mixed) == QNC_OK);

  EXPECT(qnc_space_dim(plane, &dim) == QNC_OK && dim == 2);
  EXPECT(qnc_space_member(diag, "2,2", &flag) == QNC_OK && flag == 1);
  EXPECT(qnc_space_member(diag, "2,1", &flag) == QNC_OK && flag == 0);
  EXPECT(qnc_space_lineality(diag, &out) == QNC_OK);
  expect_string(out, "[[\"1\",\"1\"]]");

  EXPECT(qnc_norm_eval(uu, "2,3", &out) == QNC_OK);
  expect_string(out, "5");
  EXPECT(qnc_dist(plane, uu, "2,3", "1,1", 0, &out) == QNC_OK);
  expect_string(out, "0");
  EXPECT(qnc_dist(plane, uu, "2,3", "1,1", 1, &out) == QNC_OK);
  expect_string(out, "3");
  EXPECT(qnc_dist(plane, uu, "1/2,1", "1", 0, &out) == QNC_ERR_DIMENSION);
  EXPECT(strlen(qnc_last_error()) > 0);

  EXPECT(qnc_quotient_build(plane, uu, diag, 64, &ex7) == QNC_OK);
  EXPECT(qnc_quotient_certificate(ex7, &out) == QNC_OK);
  EXPECT(out != NULL && strncmp(out, "FALSIFIED witness=(", 19) == 0);
  qnc_string_free(out);
  EXPECT(qnc_quotient_hatp(ex7, "2,-3", 0, &out) == QNC_ERR_PRECONDITION);
  EXPECT(strstr(qnc_last_error(), "not closed") != NULL);
  EXPECT(qnc_quotient_hatp(ex7, "2,-3", 1, &out) == QNC_OK);
  expect_string(out, "0");

  EXPECT(qnc_quotient_build(plane, mixed, axis, 64, &closed) == QNC_OK);
  EXPECT(qnc_quotient_certificate(closed, &out) == QNC_OK);
  expect_string(out, "CLOSED");
  EXPECT(qnc_quotient_hatp(closed, "2,-3", 0, &out) == QNC_OK);
  expect_string(out, "3");
  EXPECT(qnc_quotient_qdist(closed, "2,3", "7,-1", 0, &out) == QNC_OK);
  expect_string(out, "4");
  EXPECT(qnc_quotient_class(closed, "2,3", &out) == QNC_OK);
  expect_string(out, "{\"rep\":[\"0\",\"3\"],\"coordinates\":[\"3\"]}");
  EXPECT(qnc_quotient_polar(closed, &out) == QNC_OK);
  qnc_string_free(out);
  EXPECT(qnc_quotient_describe(closed, &out) == QNC_OK);
  qnc_string_free(out);

  EXPECT(qnc_map_from_json("{\"matrix\": [[1,0],[0,1]], "
                           "\"source\": {\"space\": {\"dim\": 2, \"kind\": \"full\"}, \"norm\": {\"wplus\": [1,1], \"wminus\": [0,0]}}, "
                           "\"target\": {\"space\": {\"dim\": 2, \"kind\": \"full\"}, \"norm\": {\"wplus\": [1,1], \"wminus\": [0,0]}}}",
                           NULL, &map) == QNC_OK);
  EXPECT(qnc_map_opnorm(map, &out) == QNC_OK);
  expect_string(out, "1");
  EXPECT(qnc_map_analyze(map, &out) == QNC_OK);
  EXPECT(out != NULL && strstr(out, "\"continuous\": true") != NULL);
  qnc_string_free(out);

  EXPECT(qnc_space_from_json("{\"dim\": 2, \"kind\": \"cylinder\"}", &diag) == QNC_ERR_PARSE);
  EXPECT(qnc_space_from_json("[1,2", &diag) == QNC_ERR_PARSE);
  EXPECT(qnc_space_load("/nonexistent/cone.json", &diag) != QNC_OK);
  EXPECT(qnc_norm_eval(NULL, "1", &out) == QNC_ERR_ARGUMENT);
  EXPECT(qnc_complexity_compare_files("/nonexistent/a.csv", "/nonexistent/b.csv", 4, &out) == QNC_ERR_IO);
  EXPECT(strcmp(qnc_status_name(QNC_ERR_PARSE), "parse error") == 0);
  EXPECT(strlen(qnc_version()) > 0);

  qnc_map_free(map);
  qnc_quotient_free(closed);
  qnc_quotient_free(ex7);
  qnc_norm_free(mixed);
  qnc_norm_free(uu);
  qnc_space_free(axis);
  qnc_space_free(diag);
  qnc_space_free(plane);
  qnc_space_free(NULL);

  if (failures) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API: all expectations met\n");
  return 0;
}
