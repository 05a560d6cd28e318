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

// extern "C" surface over the C++ core. Exceptions never cross this
// boundary: each entry point maps them to a dh_status and stashes the
// message for dh_last_error().

#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include "dualheap/baselines.hpp"
#include "dualheap/bench.hpp"
#include "dualheap/dualheap.h"
#include "dualheap/selector.hpp"

using dualheap::Element;

struct dh_array {
  dualheap::SentinelArray<Element> data;
};

struct dh_bench {
  dualheap::BenchConfig config;
  std::vector<dualheap::ExperimentRecord> records;
};

struct dh_worstcase {
  std::vector<dualheap::WorstCaseReport> reports;
};

namespace {

thread_local std::string g_last_error;

dh_status fail(dh_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <class F>
dh_status guarded(F&& body) noexcept {
  try {
    body();
    return DH_OK;
  } catch (const dualheap::Error& e) {
    return fail(static_cast<dh_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DH_ERR_INTERNAL, "unknown error");
  }
}

dh_status null_arg(const char* name) {
  g_last_error = std::string("null argument: ") + name;
  return DH_ERR_INVALID_ARGUMENT;
}

dualheap::SwapStrategy to_core(dh_swap_strategy s) {
  switch (s) {
    case DH_SWAP_TREE: return dualheap::SwapStrategy::tree;
    case DH_SWAP_BRANCH: return dualheap::SwapStrategy::branch;
    case DH_SWAP_ROOT: return dualheap::SwapStrategy::root;
  }
  throw dualheap::InvalidArgument("unknown swap strategy");
}

dualheap::PivotKind to_core(dh_pivot p) {
  switch (p) {
    case DH_PIVOT_FIRST: return dualheap::PivotKind::first;
    case DH_PIVOT_RANDOM: return dualheap::PivotKind::random;
    case DH_PIVOT_MOM: return dualheap::PivotKind::median_of_medians;
  }
  throw dualheap::InvalidArgument("unknown pivot rule");
}

dualheap::Algorithm to_core(dh_algo a) {
  switch (a) {
    case DH_ALGO_DHSELECT: return dualheap::Algorithm::dhselect;
    case DH_ALGO_QUICKSELECT: return dualheap::Algorithm::quickselect;
    case DH_ALGO_QUICKSELECT_MOM: return dualheap::Algorithm::quickselect_mom;
  }
  throw dualheap::InvalidArgument("unknown algorithm");
}

dualheap::Distribution to_core(dh_dist d) {
  switch (d) {
    case DH_DIST_RANDOM: return dualheap::Distribution::random;
    case DH_DIST_SORTED: return dualheap::Distribution::sorted;
    case DH_DIST_REVERSE: return dualheap::Distribution::reverse;
    case DH_DIST_ORGANPIPE: return dualheap::Distribution::organpipe;
    case DH_DIST_ALLEQUAL: return dualheap::Distribution::allequal;
    case DH_DIST_FEWVALUES: return dualheap::Distribution::fewvalues;
  }
  throw dualheap::InvalidArgument("unknown distribution");
}

dualheap::SelectOptions to_core(const dh_select_options* opts) {
  dualheap::SelectOptions out;
  if (opts) {
    out.strategy = to_core(opts->strategy);
    out.presplit = opts->presplit;
    out.workers = opts->workers;
  }
  dualheap::validate(out);
  return out;
}

void add_metrics(dh_metrics* out, const dualheap::Metrics& m) {
  if (!out) return;
  out->compares_construct += m.compares_construct;
  out->moves_construct += m.moves_construct;
  out->compares_swap += m.compares_swap;
  out->moves_swap += m.moves_swap;
  out->compares_other += m.compares_other;
  out->moves_other += m.moves_other;
}

template <class Enum, std::size_t N>
dh_status parse_name(const char* name, const char* const (&names)[N],
                     Enum* out, const char* what) {
  if (!name || !out) return null_arg(what);
  for (std::size_t i = 0; i < N; ++i) {
    if (std::strcmp(name, names[i]) == 0) {
      *out = static_cast<Enum>(i);
      return DH_OK;
    }
  }
  g_last_error = std::string("unknown ") + what + " '" + name + "'";
  return DH_ERR_INVALID_ARGUMENT;
}

constexpr const char* kSwapNames[] = {"tree", "branch", "root"};
constexpr const char* kAlgoNames[] = {"dhselect", "quickselect",
                                      "quickselect-mom"};
constexpr const char* kPivotNames[] = {"first", "random", "mom"};
constexpr const char* kDistNames[] = {"random",    "sorted",   "reverse",
                                      "organpipe", "allequal", "fewvalues"};

template <std::size_t N>
const char* name_of(const char* const (&names)[N], int index) {
  return index >= 0 && static_cast<std::size_t>(index) < N ? names[index]
                                                           : "unknown";
}

void write_to(const char* path, auto&& writer) {
  if (!path || std::strcmp(path, "-") == 0) {
    writer(std::cout);
    std::cout.flush();
    if (!std::cout) throw dualheap::IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw dualheap::IoError(std::string("cannot open '") + path +
                            "' for writing");
  }
  writer(out);
  out.flush();
  if (!out) throw dualheap::IoError(std::string("failed writing '") + path + "'");
}

}  // namespace

extern "C" {

const char* dh_last_error(void) { return g_last_error.c_str(); }

const char* dh_status_name(dh_status status) {
  switch (status) {
    case DH_OK: return "ok";
    case DH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DH_ERR_EMPTY_INPUT: return "empty input";
    case DH_ERR_OUT_OF_RANGE: return "out of range";
    case DH_ERR_INVALID_PLAN: return "invalid plan";
    case DH_ERR_INVARIANT: return "invariant violation";
    case DH_ERR_IO: return "i/o error";
    case DH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dh_version(void) { return "1.0.0"; }

void dh_select_options_init(dh_select_options* opts) {
  if (!opts) return;
  opts->strategy = DH_SWAP_TREE;
  opts->presplit = 1;
  opts->workers = 1;
}

dh_status dh_parse_swap(const char* name, dh_swap_strategy* out) {
  return parse_name(name, kSwapNames, out, "swap strategy");
}
dh_status dh_parse_algo(const char* name, dh_algo* out) {
  return parse_name(name, kAlgoNames, out, "algorithm");
}
dh_status dh_parse_pivot(const char* name, dh_pivot* out) {
  return parse_name(name, kPivotNames, out, "pivot rule");
}
dh_status dh_parse_dist(const char* name, dh_dist* out) {
  return parse_name(name, kDistNames, out, "distribution");
}
const char* dh_swap_name(dh_swap_strategy s) { return name_of(kSwapNames, s); }
const char* dh_algo_name(dh_algo a) { return name_of(kAlgoNames, a); }
const char* dh_pivot_name(dh_pivot p) { return name_of(kPivotNames, p); }
const char* dh_dist_name(dh_dist d) { return name_of(kDistNames, d); }

dh_status dh_array_create(const int64_t* values, size_t n, dh_array** out) {
  if (!out) return null_arg("out");
  if (!values && n > 0) return null_arg("values");
  return guarded([&] {
    *out = new dh_array{dualheap::SentinelArray<Element>::prepare(
        std::span<const Element>(values, n))};
  });
}

void dh_array_destroy(dh_array* arr) { delete arr; }

size_t dh_array_size(const dh_array* arr) { return arr ? arr->data.size() : 0; }

dh_status dh_array_read(const dh_array* arr, int64_t* out, size_t cap) {
  if (!arr) return null_arg("arr");
  if (!out) return null_arg("out");
  const auto payload = arr->data.payload();
  if (cap < payload.size()) {
    return fail(DH_ERR_OUT_OF_RANGE, "output buffer too small");
  }
  std::copy(payload.begin(), payload.end(), out);
  return DH_OK;
}

dh_status dh_array_select(dh_array* arr, size_t k,
                          const dh_select_options* opts, int64_t* value,
                          dh_metrics* metrics) {
  if (!arr) return null_arg("arr");
  return guarded([&] {
    dualheap::Metrics m;
    const auto outcome = dualheap::dh_select(arr->data, k, to_core(opts), m);
    if (value) *value = outcome.value;
    add_metrics(metrics, m);
  });
}

dh_status dh_array_quickselect(dh_array* arr, size_t k, dh_pivot pivot,
                               uint64_t seed, int64_t* value,
                               dh_metrics* metrics) {
  if (!arr) return null_arg("arr");
  return guarded([&] {
    dualheap::Metrics m;
    const Element v = dualheap::quickselect(
        arr->data.window(), k, dualheap::PivotRule{to_core(pivot), seed}, m);
    if (value) *value = v;
    add_metrics(metrics, m);
  });
}

int dh_array_verify_partition(const dh_array* arr, size_t k) {
  return arr && dualheap::verify_partition(arr->data, k) ? 1 : 0;
}

dh_status dh_sort(int64_t* values, size_t n, const dh_select_options* opts,
                  dh_metrics* metrics) {
  if (!values && n > 0) return null_arg("values");
  return guarded([&] {
    dualheap::Metrics m;
    const auto sorted = dualheap::dh_sort(std::span<const Element>(values, n),
                                          to_core(opts), m);
    std::copy(sorted.begin(), sorted.end(), values);
    add_metrics(metrics, m);
  });
}

dh_status dh_generate(dh_dist dist, size_t n, uint64_t seed, int64_t* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto data = dualheap::generate({n, to_core(dist), seed});
    std::copy(data.begin(), data.end(), out);
  });
}

dh_status dh_bench_create(dh_bench** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    auto* bench = new dh_bench;
    bench->config.sizes.clear();
    bench->config.dists.clear();
    bench->config.variants.clear();
    *out = bench;
  });
}

void dh_bench_destroy(dh_bench* bench) { delete bench; }

dh_status dh_bench_add_size(dh_bench* bench, size_t n) {
  if (!bench) return null_arg("bench");
  if (n == 0) return fail(DH_ERR_INVALID_ARGUMENT, "size must be at least 1");
  return guarded([&] { bench->config.sizes.push_back(n); });
}

dh_status dh_bench_add_dist(dh_bench* bench, dh_dist dist) {
  if (!bench) return null_arg("bench");
  return guarded([&] { bench->config.dists.push_back(to_core(dist)); });
}

dh_status dh_bench_add_variant(dh_bench* bench, dh_algo algo,
                               dh_swap_strategy strategy, int presplit,
                               dh_pivot pivot) {
  if (!bench) return null_arg("bench");
  return guarded([&] {
    dualheap::Variant v;
    v.algo = to_core(algo);
    v.strategy = to_core(strategy);
    v.presplit = presplit;
    v.pivot = to_core(pivot);
    if (v.algo == dualheap::Algorithm::dhselect) {
      dualheap::SelectOptions probe;
      probe.presplit = presplit;
      dualheap::validate(probe);
    }
    bench->config.variants.push_back(v);
  });
}

dh_status dh_bench_set_trials(dh_bench* bench, size_t trials) {
  if (!bench) return null_arg("bench");
  bench->config.trials = trials;
  return DH_OK;
}

dh_status dh_bench_set_seed(dh_bench* bench, uint64_t seed) {
  if (!bench) return null_arg("bench");
  bench->config.seed = seed;
  return DH_OK;
}

dh_status dh_bench_set_k(dh_bench* bench, size_t k) {
  if (!bench) return null_arg("bench");
  if (k == 0) {
    bench->config.k.reset();
  } else {
    bench->config.k = k;
  }
  return DH_OK;
}

dh_status dh_bench_set_workers(dh_bench* bench, size_t workers) {
  if (!bench) return null_arg("bench");
  return guarded([&] {
    dualheap::SelectOptions probe;
    probe.workers = workers;
    dualheap::validate(probe);
    bench->config.workers = workers;
  });
}

dh_status dh_bench_set_timing(dh_bench* bench, int enabled) {
  if (!bench) return null_arg("bench");
  bench->config.timing = enabled != 0;
  return DH_OK;
}

dh_status dh_bench_run(dh_bench* bench) {
  if (!bench) return null_arg("bench");
  return guarded([&] {
    dualheap::BenchConfig config = bench->config;
    const dualheap::BenchConfig defaults;
    if (config.sizes.empty()) config.sizes = defaults.sizes;
    if (config.dists.empty()) config.dists = defaults.dists;
    if (config.variants.empty()) config.variants = defaults.variants;
    bench->records.clear();
    bench->records = dualheap::run_benchmark(config);
  });
}

size_t dh_bench_record_count(const dh_bench* bench) {
  return bench ? bench->records.size() : 0;
}

dh_status dh_bench_get_record(const dh_bench* bench, size_t index, dh_record* out) {
  if (!bench) return null_arg("bench");
  if (!out) return null_arg("out");
  if (index >= bench->records.size()) {
    return fail(DH_ERR_OUT_OF_RANGE, "record index out of range");
  }
  const auto& r = bench->records[index];
  *out = dh_record{r.algo.c_str(),      r.swap_strategy.c_str(),
                   r.presplit,          r.n,
                   r.k,                 r.dist.c_str(),
                   r.seed,              r.trial,
                   r.compares_construct, r.moves_construct,
                   r.compares_swap,     r.moves_swap,
                   r.compares_total,    r.moves_total,
                   r.elapsed_ns,        r.correct ? 1 : 0};
  return DH_OK;
}

dh_status dh_bench_write_csv(const dh_bench* bench, const char* path) {
  if (!bench) return null_arg("bench");
  return guarded([&] {
    write_to(path, [&](std::ostream& os) {
      dualheap::emit_csv(bench->records, os);
    });
  });
}

dh_status dh_worstcase_exhaustive(size_t max_n, const dh_select_options* opts,
                                  dh_worstcase** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    auto reports = dualheap::worst_case_exhaustive(max_n, to_core(opts));
    *out = new dh_worstcase{std::move(reports)};
  });
}

dh_status dh_worstcase_random(size_t n, size_t samples, uint64_t seed,
                              const dh_select_options* opts,
                              dh_worstcase** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    auto report = dualheap::worst_case_random(n, samples, seed, to_core(opts));
    *out = new dh_worstcase{{std::move(report)}};
  });
}

void dh_worstcase_destroy(dh_worstcase* wc) { delete wc; }

size_t dh_worstcase_row_count(const dh_worstcase* wc) {
  return wc ? wc->reports.size() : 0;
}

dh_status dh_worstcase_get_row(const dh_worstcase* wc, size_t index,
                           dh_worstcase_row* out) {
  if (!wc) return null_arg("wc");
  if (!out) return null_arg("out");
  if (index >= wc->reports.size()) {
    return fail(DH_ERR_OUT_OF_RANGE, "row index out of range");
  }
  const auto& r = wc->reports[index];
  *out = dh_worstcase_row{r.n, r.instances_tested, r.max_compares_swap,
                          r.argmax_k, r.argmax_permutation.data()};
  return DH_OK;
}

dh_status dh_worstcase_write_csv(const dh_worstcase* wc, const char* path) {
  if (!wc) return null_arg("wc");
  return guarded([&] {
    write_to(path, [&](std::ostream& os) {
      dualheap::emit_worstcase_csv(wc->reports, os);
    });
  });
}

dh_status dh_worstcase_fit(const dh_worstcase* wc, double* slope) {
  if (!wc) return null_arg("wc");
  if (!slope) return null_arg("slope");
  return guarded([&] { *slope = dualheap::fit_growth(wc->reports); });
}

dh_status dh_fit_growth(const double* sizes, const double* values,
                        size_t count, double* slope) {
  if ((!sizes || !values) && count > 0) return null_arg("sizes/values");
  if (!slope) return null_arg("slope");
  return guarded([&] {
    std::vector<dualheap::GrowthPoint> points;
    for (size_t i = 0; i < count; ++i) points.push_back({sizes[i], values[i]});
    *slope = dualheap::fit_growth(points);
  });
}

dh_status dh_fit_csv(const char* path, const char* metric, const char* algo,
                     const char* variant, int presplit, double* slope,
                     size_t* sizes_used) {
  if (!path) return null_arg("path");
  if (!metric) return null_arg("metric");
  if (!slope) return null_arg("slope");
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dualheap::IoError(std::string("cannot open '") + path + "'");
    std::vector<dualheap::ExperimentRecord> kept;
    for (auto& r : dualheap::parse_csv(in)) {
      if (algo && r.algo != algo) continue;
      if (variant && r.swap_strategy != variant) continue;
      if (presplit >= 0 && r.presplit != presplit) continue;
      kept.push_back(std::move(r));
    }
    const auto points = dualheap::mean_by_size(kept, metric);
    *slope = dualheap::fit_growth(points);
    if (sizes_used) *sizes_used = points.size();
  });
}

}  // extern "C"
