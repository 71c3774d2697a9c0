/*
 * Copyright 2026 The sipwigner Authors
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

/*
 * C interface to sipwigner: semi-inner products and Birkhoff-James
 * orthogonality on finite-dimensional smooth normed spaces, Wigner-type
 * symmetry checks for black-box maps, and reconstruction of the underlying
 * (conjugate-)linear isometry and phase function.
 *
 * Conventions:
 *  - Every fallible call returns sw_status; SW_OK is zero.
 *  - On failure sw_last_error() describes the problem for the calling thread
 *    until its next sw_* call.
 *  - Vectors are arrays of sw_complex; real spaces require im == 0.
 *  - Strings returned through char** are owned by the caller and released
 *    with sw_string_free(). JSON output prints doubles with 17 significant
 *    digits.
 *  - Handles are immutable after creation and may be shared across threads.
 */

#ifndef SIPWIGNER_SIPWIGNER_H
#define SIPWIGNER_SIPWIGNER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SIPWIGNER_BUILDING)
#    define SW_API __declspec(dllexport)
#  else
#    define SW_API __declspec(dllimport)
#  endif
#else
#  define SW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sw_status {
  SW_OK = 0,
  SW_ERR_CONTRACT = 1,
  SW_ERR_NON_SMOOTH = 2,
  SW_ERR_SOLVER = 3,
  SW_ERR_UNSUPPORTED_SPACE = 4,
  SW_ERR_UNSUPPORTED_FIELD = 5,
  SW_ERR_HYPOTHESIS = 6,
  SW_ERR_KIND_AMBIGUOUS = 7,
  SW_ERR_PARSE = 8,
  SW_ERR_INTERNAL = 9
} sw_status;

typedef struct sw_complex {
  double re;
  double im;
} sw_complex;

typedef struct sw_space sw_space;
typedef struct sw_map sw_map;

/* Black-box map callback: writes f(x) (target_dim entries) into out.
   Returns 0 on success; anything else aborts the calling operation. */
typedef int (*sw_map_fn)(const sw_complex* x, size_t source_dim, sw_complex* out,
                         size_t target_dim, void* user_data);

SW_API const char* sw_version(void);
SW_API const char* sw_status_name(sw_status status);
SW_API const char* sw_last_error(void);
SW_API void sw_string_free(char* s);

/* ---- spaces ---------------------------------------------------------- */

/* {"field":"real"|"complex","dim":n,"norm":{"lp":p}|{"linf2_fixture":true}} */
SW_API sw_status sw_space_from_json(const char* json, sw_space** out);
SW_API void sw_space_free(sw_space* space);
SW_API size_t sw_space_dim(const sw_space* space);
SW_API int sw_space_is_complex(const sw_space* space);
SW_API int sw_space_is_smooth(const sw_space* space);
SW_API sw_status sw_space_to_json(const sw_space* space, char** out_json);

SW_API sw_status sw_norm(const sw_space* space, const sw_complex* x, size_t n, double* out);
SW_API sw_status sw_sip(const sw_space* space, const sw_complex* x, const sw_complex* y,
                        size_t n, sw_complex* out);
/* Finite-difference cross-check of sw_sip; h <= 0 selects the default step. */
SW_API sw_status sw_gateaux_sip(const sw_space* space, const sw_complex* x,
                                const sw_complex* y, size_t n, double h, sw_complex* out);
/* Coefficients g of the support functional at y, acting by c -> sum c_i conj(g_i). */
SW_API sw_status sw_support_functional(const sw_space* space, const sw_complex* y, size_t n,
                                       sw_complex* out_coeffs);

/* ---- orthogonality --------------------------------------------------- */

/* tol <= 0 selects the default margin threshold (1e-7, relative to |x|). */
SW_API sw_status sw_bj_orthogonal(const sw_space* space, const sw_complex* x,
                                  const sw_complex* y, size_t n, double tol,
                                  int* out_orthogonal, double* out_margin,
                                  sw_complex* out_minimizer);

/* Best approximation of target by basis[0..count) (count is 1 or 2). */
SW_API sw_status sw_best_coeffs(const sw_space* space, const sw_complex* target,
                                const sw_complex* const* basis, size_t count, size_t n,
                                sw_complex* out_coeffs, double* out_residual);

/* ---- maps ------------------------------------------------------------ */

/* Builds a map from a run config (see README); only "source", "target" and
   "map" are read. */
SW_API sw_status sw_map_from_json(const char* run_config_json, sw_map** out);
SW_API sw_status sw_map_from_callback(const sw_space* source, const sw_space* target,
                                      sw_map_fn fn, void* user_data, sw_map** out);
SW_API void sw_map_free(sw_map* map);
SW_API sw_status sw_map_eval(const sw_map* map, const sw_complex* x, size_t source_dim,
                             sw_complex* out, size_t target_dim);

/* check: "wigner", "phase_sets", "exact" or "linearity". Samples are the
   seeded structured + unit-sphere set used by the CLI. Writes a Report. */
SW_API sw_status sw_map_check(const sw_map* map, const char* check, size_t samples,
                              double tol, uint64_t seed, char** out_report_json);
/* Writes a Reconstruction document. */
SW_API sw_status sw_map_reconstruct(const sw_map* map, double tol, uint64_t seed,
                                    char** out_json);

/* ---- JSON commands (the CLI surface) --------------------------------- */

/* {"space","x","y"[,"h"]}. On SW_ERR_NON_SMOOTH *out_json is still set and
   carries the sip value with "oracle": null. */
SW_API sw_status sw_sip_eval_json(const char* request_json, char** out_json);
SW_API sw_status sw_orth_check_json(const char* request_json, char** out_json);
SW_API sw_status sw_check_json(const char* run_config_json, char** out_json);
SW_API sw_status sw_reconstruct_json(const char* run_config_json, char** out_json);
SW_API sw_status sw_counterexample_json(char** out_json);
/* Runs acceptance criterion `criterion` (1..7), or all of them when 0. */
SW_API sw_status sw_selftest_json(uint64_t seed, int criterion, char** out_json);

/* Structured witness attached to the last error, as JSON ("null" if none). */
SW_API sw_status sw_last_error_witness(char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SIPWIGNER_SIPWIGNER_H */
