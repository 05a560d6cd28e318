// Copyright 2026 The Dualheap Authors. All rights reserved.
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

#ifndef DUALHEAP_DUALHEAP_H_
#define DUALHEAP_DUALHEAP_H_

/*
 * C interface to libdualheap.
 *
 * Every fallible call returns a dh_status. On failure, dh_last_error()
 * returns a message for the calling thread that stays valid until that
 * thread's next failing call. Handles are opaque and owned by the caller;
 * release them with the matching *_destroy function.
 *
 * Selection indices (k) are 1-based.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DUALHEAP_BUILDING)
#    define DH_API __declspec(dllexport)
#  else
#    define DH_API __declspec(dllimport)
#  endif
#else
#  define DH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dh_status {
  DH_OK = 0,
  DH_ERR_INVALID_ARGUMENT = 1,
  DH_ERR_EMPTY_INPUT = 2,
  DH_ERR_OUT_OF_RANGE = 3,
  DH_ERR_INVALID_PLAN = 4,
  DH_ERR_INVARIANT = 5, /* oracle mismatch or step-budget overrun */
  DH_ERR_IO = 6,
  DH_ERR_INTERNAL = 7
} dh_status;

typedef enum dh_swap_strategy {
  DH_SWAP_TREE = 0,
  DH_SWAP_BRANCH = 1,
  DH_SWAP_ROOT = 2
} dh_swap_strategy;

typedef enum dh_algo {
  DH_ALGO_DHSELECT = 0,
  DH_ALGO_QUICKSELECT = 1,
  DH_ALGO_QUICKSELECT_MOM = 2
} dh_algo;

typedef enum dh_pivot {
  DH_PIVOT_FIRST = 0,
  DH_PIVOT_RANDOM = 1,
  DH_PIVOT_MOM = 2
} dh_pivot;

typedef enum dh_dist {
  DH_DIST_RANDOM = 0,
  DH_DIST_SORTED = 1,
  DH_DIST_REVERSE = 2,
  DH_DIST_ORGANPIPE = 3,
  DH_DIST_ALLEQUAL = 4,
  DH_DIST_FEWVALUES = 5
} dh_dist;

typedef struct dh_metrics {
  uint64_t compares_construct;
  uint64_t moves_construct;
  uint64_t compares_swap;
  uint64_t moves_swap;
  uint64_t compares_other; /* baselines */
  uint64_t moves_other;
} dh_metrics;

typedef struct dh_select_options {
  dh_swap_strategy strategy; /* default DH_SWAP_TREE */
  int presplit;              /* 0, 1 or 2; default 1 */
  size_t workers;            /* power of two; default 1 */
} dh_select_options;

DH_API const char* dh_last_error(void);
DH_API const char* dh_status_name(dh_status status);
DH_API const char* dh_version(void);

DH_API void dh_select_options_init(dh_select_options* opts);

/* Name <-> enum conversions used by the CLI. Parsers return
 * DH_ERR_INVALID_ARGUMENT for unknown names. */
DH_API dh_status dh_parse_swap(const char* name, dh_swap_strategy* out);
DH_API dh_status dh_parse_algo(const char* name, dh_algo* out);
DH_API dh_status dh_parse_pivot(const char* name, dh_pivot* out);
DH_API dh_status dh_parse_dist(const char* name, dh_dist* out);
DH_API const char* dh_swap_name(dh_swap_strategy s);
DH_API const char* dh_algo_name(dh_algo a);
DH_API const char* dh_pivot_name(dh_pivot p);
DH_API const char* dh_dist_name(dh_dist d);

/* ---- Sentinel-guarded arrays ------------------------------------------- */

typedef struct dh_array dh_array;

DH_API dh_status dh_array_create(const int64_t* values, size_t n,
                                 dh_array** out);
DH_API void dh_array_destroy(dh_array* arr);
DH_API size_t dh_array_size(const dh_array* arr);
/* Copies the n payload values (positions 1..n) into out[0..cap). */
DH_API dh_status dh_array_read(const dh_array* arr, int64_t* out, size_t cap);

/* In-place dualheap selection; leaves the array partitioned about k.
 * metrics may be NULL; counts are added to it otherwise. */
DH_API dh_status dh_array_select(dh_array* arr, size_t k,
                                 const dh_select_options* opts,
                                 int64_t* value, dh_metrics* metrics);
/* In-place quickselect with the given pivot rule (seed: DH_PIVOT_RANDOM). */
DH_API dh_status dh_array_quickselect(dh_array* arr, size_t k, dh_pivot pivot,
                                      uint64_t seed, int64_t* value,
                                      dh_metrics* metrics);
/* 1 if positions < k hold values <= position k and positions > k hold
 * values >= it, 0 otherwise. */
DH_API int dh_array_verify_partition(const dh_array* arr, size_t k);

/* Sorts values[0..n) in place by recursive dualheap partitioning. */
DH_API dh_status dh_sort(int64_t* values, size_t n,
                         const dh_select_options* opts, dh_metrics* metrics);

/* Fills out[0..n) with the seeded input family. */
DH_API dh_status dh_generate(dh_dist dist, size_t n, uint64_t seed,
                             int64_t* out);

/* ---- Benchmarks -------------------------------------------------------- */

typedef struct dh_bench dh_bench;

typedef struct dh_record {
  const char* algo;          /* valid while the bench handle lives */
  const char* swap_strategy;
  int presplit;
  size_t n;
  size_t k;
  const char* dist;
  uint64_t seed;
  size_t trial;
  uint64_t compares_construct;
  uint64_t moves_construct;
  uint64_t compares_swap;
  uint64_t moves_swap;
  uint64_t compares_total;
  uint64_t moves_total;
  uint64_t elapsed_ns;
  int correct;
} dh_record;

/* A fresh bench has no sizes, distributions or variants; defaults apply
 * to any list left empty at run time (sizes 1023,4095,16383; random;
 * dhselect/tree/presplit 1). trials = 1, seed = 1, k = median. */
DH_API dh_status dh_bench_create(dh_bench** out);
DH_API void dh_bench_destroy(dh_bench* bench);
DH_API dh_status dh_bench_add_size(dh_bench* bench, size_t n);
DH_API dh_status dh_bench_add_dist(dh_bench* bench, dh_dist dist);
DH_API dh_status dh_bench_add_variant(dh_bench* bench, dh_algo algo,
                                      dh_swap_strategy strategy, int presplit,
                                      dh_pivot pivot);
DH_API dh_status dh_bench_set_trials(dh_bench* bench, size_t trials);
DH_API dh_status dh_bench_set_seed(dh_bench* bench, uint64_t seed);
/* k = 0 restores the per-size median. */
DH_API dh_status dh_bench_set_k(dh_bench* bench, size_t k);
DH_API dh_status dh_bench_set_workers(dh_bench* bench, size_t workers);
DH_API dh_status dh_bench_set_timing(dh_bench* bench, int enabled);
/* Runs every trial, replacing earlier results. DH_ERR_INVARIANT on an
 * oracle mismatch; dh_last_error() then carries a reproduction line. */
DH_API dh_status dh_bench_run(dh_bench* bench);
DH_API size_t dh_bench_record_count(const dh_bench* bench);
DH_API dh_status dh_bench_get_record(const dh_bench* bench, size_t index,
                                 dh_record* out);
/* path NULL or "-" writes to stdout. */
DH_API dh_status dh_bench_write_csv(const dh_bench* bench, const char* path);

/* ---- Worst-case search ------------------------------------------------- */

typedef struct dh_worstcase dh_worstcase;

typedef struct dh_worstcase_row {
  size_t n;
  uint64_t instances_tested;
  uint64_t max_compares_swap;
  size_t argmax_k;
  const int64_t* argmax_permutation; /* n values, owned by the handle */
} dh_worstcase_row;

/* All permutations of 1..n and all k, for n = 1..max_n (max_n <= 9). */
DH_API dh_status dh_worstcase_exhaustive(size_t max_n,
                                         const dh_select_options* opts,
                                         dh_worstcase** out);
DH_API dh_status dh_worstcase_random(size_t n, size_t samples, uint64_t seed,
                                     const dh_select_options* opts,
                                     dh_worstcase** out);
DH_API void dh_worstcase_destroy(dh_worstcase* wc);
DH_API size_t dh_worstcase_row_count(const dh_worstcase* wc);
DH_API dh_status dh_worstcase_get_row(const dh_worstcase* wc, size_t index,
                                  dh_worstcase_row* out);
DH_API dh_status dh_worstcase_write_csv(const dh_worstcase* wc,
                                        const char* path);
/* Log-log slope of the per-n maxima. */
DH_API dh_status dh_worstcase_fit(const dh_worstcase* wc, double* slope);

/* ---- Growth fitting ---------------------------------------------------- */

/* Least-squares slope of log(values) against log(sizes). */
DH_API dh_status dh_fit_growth(const double* sizes, const double* values,
                               size_t count, double* slope);

/* Fits per-size means of `metric` from a bench CSV file. Filters may be
 * NULL (algo, variant) or negative (presplit) to accept all rows.
 * sizes_used receives the number of distinct sizes (may be NULL). */
DH_API dh_status dh_fit_csv(const char* path, const char* metric,
                            const char* algo, const char* variant,
                            int presplit, double* slope, size_t* sizes_used);

#ifdef __cplusplus
}
#endif

#endif /* DUALHEAP_DUALHEAP_H_ */
