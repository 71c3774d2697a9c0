/* Copyright 2026 The sipwigner Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Exercises the public C interface from plain C. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "sipwigner/sipwigner.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static const char* kL3 = "{\"field\":\"real\",\"dim\":2,\"norm\":{\"lp\":3}}";
static const char* kC3 = "{\"field\":\"complex\",\"dim\":3,\"norm\":{\"lp\":3}}";
static const char* kFixture = "{\"field\":\"real\",\"dim\":2,\"norm\":{\"linf2_fixture\":true}}";

/* (x1, x2, x3) -> (i x3, x1, -x2), a linear isometry of any ell_p. */
static int rotate(const sw_complex* x, size_t n, sw_complex* out, size_t m, void* user) {
  (void)user;
  if (n != 3 || m != 3) return 1;
  out[0].re = -x[2].im;
  out[0].im = x[2].re;
  out[1] = x[0];
  out[2].re = -x[1].re;
  out[2].im = -x[1].im;
  return 0;
}

static int doubling(const sw_complex* x, size_t n, sw_complex* out, size_t m, void* user) {
  size_t i;
  (void)user;
  (void)m;
  for (i = 0; i < n; ++i) {
    out[i].re = 2.0 * x[i].re;
    out[i].im = 2.0 * x[i].im;
  }
  return 0;
}

static int refuse(const sw_complex* x, size_t n, sw_complex* out, size_t m, void* user) {
  (void)x; (void)n; (void)out; (void)m;
  ++*(int*)user;
  return 7;
}

static void test_space_basics(void) {
  sw_space* s = NULL;
  sw_complex x[2] = {{1, 0}, {2, 0}}, y[2] = {{3, 0}, {1, 0}}, v, fd, g[2];
  double nrm = 0.0;
  char* text = NULL;

  EXPECT(sw_space_from_json(kL3, &s) == SW_OK);
  EXPECT(sw_space_dim(s) == 2);
  EXPECT(!sw_space_is_complex(s));
  EXPECT(sw_space_is_smooth(s));
  EXPECT(sw_norm(s, x, 2, &nrm) == SW_OK);
  EXPECT(fabs(nrm - cbrt(9.0)) < 1e-15);
  EXPECT(sw_sip(s, x, y, 2, &v) == SW_OK);
  EXPECT(fabs(v.re - 11.0 / cbrt(28.0)) < 1e-14 && v.im == 0.0);
  EXPECT(sw_gateaux_sip(s, x, y, 2, 0.0, &fd) == SW_OK);
  EXPECT(fabs(fd.re - v.re) < 1e-8);
  EXPECT(sw_support_functional(s, y, 2, g) == SW_OK);
  EXPECT(fabs(g[0].re - 9.0 * pow(28.0, -2.0 / 3.0)) < 1e-14);
  EXPECT(sw_space_to_json(s, &text) == SW_OK);
  EXPECT(text != NULL && strstr(text, "\"lp\"") != NULL);
  sw_string_free(text);

  /* Contract violations come back as status codes with a message. */
  EXPECT(sw_norm(s, x, 3, &nrm) == SW_ERR_CONTRACT);
  EXPECT(strlen(sw_last_error()) > 0);
  EXPECT(sw_norm(NULL, x, 2, &nrm) == SW_ERR_CONTRACT);
  sw_space_free(s);

  EXPECT(sw_space_from_json("{not json", &s) == SW_ERR_PARSE);
  EXPECT(s == NULL);
  EXPECT(strcmp(sw_status_name(SW_ERR_NON_SMOOTH), "NonSmoothPoint") == 0);
  EXPECT(strlen(sw_version()) > 0);
}

static void test_fixture_space(void) {
  sw_space* s = NULL;
  sw_complex x[2] = {{1, 0}, {0, 0}}, y[2] = {{1, 0}, {1, 0}}, v, g[2];
  EXPECT(sw_space_from_json(kFixture, &s) == SW_OK);
  EXPECT(!sw_space_is_smooth(s));
  EXPECT(sw_sip(s, x, y, 2, &v) == SW_OK && v.re == 0.75);
  EXPECT(sw_gateaux_sip(s, x, y, 2, 0.0, &v) == SW_ERR_NON_SMOOTH);
  EXPECT(sw_support_functional(s, y, 2, g) == SW_ERR_NON_SMOOTH);
  sw_space_free(s);
}

static void test_orthogonality(void) {
  sw_space* s = NULL;
  sw_complex x[2] = {{1, 0}, {1, 0}}, y[2] = {{1, 0}, {-1, 0}}, lambda;
  sw_complex b0[2] = {{1, 0}, {0, 0}}, b1[2] = {{0, 0}, {1, 0}}, t[2] = {{2, 0}, {-3, 0}};
  const sw_complex* basis[2] = {b0, b1};
  sw_complex coeffs[2];
  double margin = 0.0, residual = 1.0;
  int orth = 0;
  EXPECT(sw_space_from_json(kL3, &s) == SW_OK);
  EXPECT(sw_bj_orthogonal(s, x, y, 2, 0.0, &orth, &margin, &lambda) == SW_OK);
  EXPECT(orth == 1);
  EXPECT(sw_bj_orthogonal(s, x, b0, 2, 0.0, &orth, &margin, &lambda) == SW_OK);
  EXPECT(orth == 0 && margin < 0.0);
  EXPECT(sw_best_coeffs(s, t, basis, 2, 2, coeffs, &residual) == SW_OK);
  EXPECT(fabs(coeffs[0].re - 2.0) < 1e-10 && fabs(coeffs[1].re + 3.0) < 1e-10);
  EXPECT(residual < 1e-10);
  basis[1] = b0;
  EXPECT(sw_best_coeffs(s, t, basis, 2, 2, coeffs, &residual) == SW_ERR_CONTRACT);
  sw_space_free(s);
}

static void test_callback_maps(void) {
  sw_space* s = NULL;
  sw_map* m = NULL;
  char* text = NULL;
  int calls = 0;
  sw_complex x[3] = {{1, 2}, {3, 0}, {0, -1}}, fx[3];

  EXPECT(sw_space_from_json(kC3, &s) == SW_OK);
  EXPECT(sw_map_from_callback(s, s, rotate, NULL, &m) == SW_OK);
  EXPECT(sw_map_eval(m, x, 3, fx, 3) == SW_OK);
  EXPECT(fx[0].re == 1.0 && fx[0].im == 0.0 && fx[1].re == 1.0 && fx[2].re == -3.0);

  EXPECT(sw_map_check(m, "wigner", 12, 1e-8, 5, &text) == SW_OK);
  EXPECT(strstr(text, "\"verdict\":\"pass\"") != NULL);
  sw_string_free(text);
  EXPECT(sw_map_check(m, "exact", 12, 1e-8, 5, &text) == SW_OK);
  EXPECT(strstr(text, "\"verdict\":\"pass\"") != NULL);
  sw_string_free(text);
  EXPECT(sw_map_check(m, "phase_sets", 12, 1e-8, 5, &text) == SW_ERR_UNSUPPORTED_FIELD);
  EXPECT(sw_map_check(m, "bogus", 12, 1e-8, 5, &text) == SW_ERR_PARSE);
  EXPECT(sw_map_reconstruct(m, 1e-8, 5, &text) == SW_OK);
  EXPECT(strstr(text, "\"kind\":\"linear\"") != NULL);
  sw_string_free(text);
  sw_map_free(m);

  EXPECT(sw_map_from_callback(s, s, doubling, NULL, &m) == SW_OK);
  EXPECT(sw_map_check(m, "wigner", 6, 1e-8, 1, &text) == SW_OK);
  EXPECT(strstr(text, "\"verdict\":\"fail\"") != NULL);
  sw_string_free(text);
  EXPECT(sw_map_reconstruct(m, 1e-8, 1, &text) == SW_ERR_HYPOTHESIS);
  EXPECT(sw_last_error_witness(&text) == SW_OK);
  EXPECT(strstr(text, "norm_fx") != NULL);
  sw_string_free(text);
  sw_map_free(m);

  EXPECT(sw_map_from_callback(s, s, refuse, &calls, &m) == SW_OK);
  EXPECT(sw_map_eval(m, x, 3, fx, 3) != SW_OK);
  EXPECT(calls == 1);
  sw_map_free(m);
  sw_space_free(s);
}

static void test_json_commands(void) {
  char* text = NULL;
  sw_map* m = NULL;
  EXPECT(sw_counterexample_json(&text) == SW_OK);
  EXPECT(strstr(text, "\"sip_xy\":0.75") != NULL);
  EXPECT(strstr(text, "\"sip_TxTy\":0.25") != NULL);
  sw_string_free(text);

  EXPECT(sw_sip_eval_json("{\"space\":{\"field\":\"real\",\"dim\":2,\"norm\":{\"linf2_fixture\":true}},"
                          "\"x\":[1,0],\"y\":[1,1]}",
                          &text) == SW_ERR_NON_SMOOTH);
  EXPECT(text != NULL && strstr(text, "\"oracle\":null") != NULL);
  sw_string_free(text);
  text = NULL;

  EXPECT(sw_check_json("{\"source\":{\"field\":\"real\",\"dim\":2,\"norm\":{\"linf2_fixture\":true}},"
                       "\"map\":{\"builtin\":\"example_1_1_T\"}}",
                       &text) == SW_ERR_UNSUPPORTED_SPACE);
  EXPECT(text == NULL);

  EXPECT(sw_map_from_json("{\"source\":{\"field\":\"real\",\"dim\":3,\"norm\":{\"lp\":4}},"
                          "\"map\":{\"builtin\":\"identity\"}}",
                          &m) == SW_OK);
  EXPECT(sw_map_check(m, "linearity", 8, 1e-8, 3, &text) == SW_OK);
  EXPECT(strstr(text, "\"verdict\":\"pass\"") != NULL);
  sw_string_free(text);
  sw_map_free(m);

  EXPECT(sw_selftest_json(0, 1, &text) == SW_OK);
  EXPECT(strstr(text, "\"verdict\":\"pass\"") != NULL);
  sw_string_free(text);
  EXPECT(sw_selftest_json(0, 9, &text) == SW_ERR_CONTRACT);
}

int main(void) {
  test_space_basics();
  test_fixture_space();
  test_orthogonality();
  test_callback_maps();
  test_json_commands();
  if (failures != 0) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API: all expectations met\n");
  return 0;
}
