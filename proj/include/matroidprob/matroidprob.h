// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to libmatroidprob.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Every fallible call returns an mp_status. On failure,
 * mp_last_error() returns a message for the most recent failing call on the
 * calling thread. Strings returned through char** out-parameters are
 * NUL-terminated, heap-allocated, and must be released with mp_string_free.
 *
 * Distributions are passed as arrays of doubles indexed by ground-set element
 * and must be nonnegative and sum to 1 within 1e-12 (see
 * mp_distribution_normalize to repair inputs that are off by at most 1e-6).
 */
#ifndef MATROIDPROB_H_
#define MATROIDPROB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define MP_API __declspec(dllexport)
#else
#  define MP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_ERR_NOT_PRIME = 1,
  MP_ERR_TOO_LARGE = 2,
  MP_ERR_SPEC_INVALID = 3,
  MP_ERR_ELEMENT_OUT_OF_RANGE = 4,
  MP_ERR_K_OUT_OF_RANGE = 5,
  MP_ERR_ENUMERATION_LIMIT = 6,
  MP_ERR_DIMENSION_MISMATCH = 7,
  MP_ERR_INVALID_DISTRIBUTION = 8,
  MP_ERR_SINGULAR_MATRIX = 9,
  MP_ERR_SAME_ELEMENT = 10,
  MP_ERR_K_MISMATCH = 11,
  MP_ERR_DEGENERATE_INPUT = 12,
  MP_ERR_START_ON_ZERO_SET = 13,
  MP_ERR_INVALID_ARGUMENT = 14,
  MP_ERR_BAD_JSON = 15,
  MP_ERR_NULL_ARGUMENT = 16,
  MP_ERR_INTERNAL = 99
} mp_status;

typedef struct mp_matroid mp_matroid;
typedef struct mp_index mp_index;

MP_API const char* mp_version(void);
/* Stable name such as "NotPrime"; "Ok" for MP_OK. */
MP_API const char* mp_status_name(mp_status status);
MP_API const char* mp_last_error(void);
MP_API void mp_string_free(char* s);

/* ---- matroids ---------------------------------------------------------- */

/* spec_json: {"type":"projective","n":3,"q":2}, {"type":"uniform",...}, ... */
MP_API mp_status mp_matroid_from_json(const char* spec_json, mp_matroid** out);
MP_API void mp_matroid_free(mp_matroid* m);
MP_API mp_status mp_matroid_ground_size(const mp_matroid* m, size_t* out);
MP_API mp_status mp_matroid_rank(const mp_matroid* m, size_t* out);
MP_API mp_status mp_matroid_is_projective(const mp_matroid* m, int* out);
MP_API mp_status mp_matroid_is_independent(const mp_matroid* m,
                                           const size_t* elems, size_t n,
                                           int* out);
/* Canonical spec JSON. */
MP_API mp_status mp_matroid_spec_json(const mp_matroid* m, char** out_json);
/* JSON array of point coordinates for linear/projective matroids, else null. */
MP_API mp_status mp_matroid_labels_json(const mp_matroid* m, char** out_json);
/* Known automorphism generators as a JSON array of image arrays, or "null"
 * for families without built-in generators. */
MP_API mp_status mp_matroid_standard_generators(const mp_matroid* m,
                                                char** out_json);
/* Sampled basis-exchange violations of an explicit layer (0 otherwise). */
MP_API mp_status mp_matroid_exchange_violations(const mp_matroid* m,
                                                size_t trials, uint64_t seed,
                                                size_t* out);

/* ---- independent K-set index ------------------------------------------- */

/* cap == 0 selects the default cap of 10^7 sets. */
MP_API mp_status mp_index_build(const mp_matroid* m, size_t k, uint64_t cap,
                                mp_index** out);
MP_API void mp_index_free(mp_index* idx);
MP_API mp_status mp_index_count(const mp_index* idx, size_t* out);
MP_API mp_status mp_index_k(const mp_index* idx, size_t* out);
MP_API mp_status mp_index_ground_size(const mp_index* idx, size_t* out);
/* Writes the k elements of set i to out_elems. */
MP_API mp_status mp_index_set(const mp_index* idx, size_t i, size_t* out_elems);

/* ---- polynomial evaluation --------------------------------------------- */

MP_API mp_status mp_distribution_normalize(const double* p, size_t n,
                                           int renormalize, double* out);
/* Dirichlet(1,...,1) draw from Philox stream (seed, stream). */
MP_API mp_status mp_random_distribution(size_t n, uint64_t seed,
                                        uint64_t stream, double* out);
MP_API mp_status mp_eval_f(const mp_index* idx, const double* x, size_t n,
                           double* out);
MP_API mp_status mp_eval_h(const mp_index* idx, const double* x, size_t n,
                           double* out);
/* F(p) = K! f(p); p must be a distribution. */
MP_API mp_status mp_eval_probability(const mp_index* idx, const double* p,
                                     size_t n, double* out);
/* F(u) = K! |index| / m^K as an exact rational "num/den". */
MP_API mp_status mp_exact_uniform_probability(const mp_index* idx,
                                              char** out_rational);
MP_API mp_status mp_gradient_f(const mp_index* idx, const double* x, size_t n,
                               double* out);
/* Row-major n*n output. */
MP_API mp_status mp_hessian_f(const mp_index* idx, const double* x, size_t n,
                              double* out);
MP_API mp_status mp_concavity_probe(const mp_index* idx, size_t trials,
                                    uint64_t seed, char** out_json);

/* ---- symmetry ----------------------------------------------------------- */

/* gens_json: JSON array of permutation image arrays. */
MP_API mp_status mp_orbits(const char* gens_json, char** out_json);
MP_API mp_status mp_orbit_average(const char* gens_json, const double* p,
                                  size_t n, double* out);
MP_API mp_status mp_apply_permutation(const size_t* image, const double* p,
                                      size_t n, double* out);
MP_API mp_status mp_check_invariance(const mp_index* idx, const size_t* image,
                                     const double* p, size_t n, double* out);
/* entries: N*N row-major matrix over F_q for a projective matroid. */
MP_API mp_status mp_pgl_point_permutation(const mp_matroid* m,
                                          const uint32_t* entries,
                                          size_t n_entries, size_t* out_image);

/* ---- projective geometry ------------------------------------------------ */

/* {"m":..,"value":"num/den","bracket_form":..,"vector_form":..,"float":..,
 *  "b2":..,"hessian_coefficient":..} (b2/hessian only when K >= 2). */
MP_API mp_status mp_pg_closed_forms(size_t n, int64_t q, size_t k,
                                    char** out_json);
MP_API mp_status mp_pg_gaussian_bracket(size_t j, int64_t q, char** out);
MP_API mp_status mp_pg_b2_count(const mp_index* idx, size_t e, size_t e2,
                                uint64_t* out);
/* idx must come from a projective matroid with K = 2. */
MP_API mp_status mp_k2_gap(const mp_index* idx, const double* p, size_t n,
                           double* lhs, double* rhs);
MP_API mp_status mp_k2_check(const mp_index* idx, size_t samples,
                             uint64_t seed, char** out_json);
MP_API mp_status mp_hessian_check(const mp_index* idx, size_t directions,
                                  uint64_t seed, char** out_json);
/* P has q^N - 1 entries over nonzero vectors in lexicographic order; out has
 * m entries. */
MP_API mp_status mp_pushforward(size_t n, int64_t q, const double* vec_probs,
                                size_t len, int renormalize, double* out,
                                size_t out_len);
MP_API mp_status mp_stability_ratio(const mp_index* idx, const double* p,
                                    size_t n, double* out);
/* config_json (nullable): {"samples":..,"seed":..,"mode":"dirichlet"|"sparse",
 * "threads":..,"buckets":..,"refine_iters":..}. */
MP_API mp_status mp_stability_scan(const mp_index* idx, const char* config_json,
                                   char** out_json);

/* ---- optimization ------------------------------------------------------- */

MP_API mp_status mp_optimality_gap(const mp_index* idx, const double* p,
                                   size_t n, double* out);
/* config_json (nullable): {"step_size":..,"max_iters":..,"tol_grad":..}.
 * start may be NULL for the uniform start. */
MP_API mp_status mp_maximize(const mp_index* idx, const char* config_json,
                             const double* start, size_t n, char** out_json);

/* ---- Monte Carlo -------------------------------------------------------- */

MP_API mp_status mp_estimate_probability(const mp_matroid* m, const double* p,
                                         size_t n, size_t k, uint64_t trials,
                                         uint64_t seed, unsigned threads,
                                         char** out_json);
/* One draw using Philox stream (seed, stream); out_elems has k entries. */
MP_API mp_status mp_sample_kset(const mp_matroid* m, const double* p, size_t n,
                                size_t k, uint64_t seed, uint64_t stream,
                                size_t* out_elems, int* distinct,
                                int* independent);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* MATROIDPROB_H_ */
