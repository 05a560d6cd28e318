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

// dualheap: command-line front end over the libdualheap C API.
//
//   dualheap select    --n 1001 --dist random --seed 7 --swap branch
//   dualheap sort      --values 5,3,9,1,7
//   dualheap bench     --sizes 1023,4095 --algo dhselect,quickselect --trials 50
//   dualheap worstcase --mode exhaustive --max-n 8
//   dualheap fit       results.csv --metric compares_swap --algo dhselect
//
// Exit status: 0 success, 1 usage or I/O error, 2 invariant violation.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dualheap/dualheap.h"

namespace {

struct Failure {
  int exit_code;
};

void check(dh_status status) {
  if (status == DH_OK) return;
  std::cerr << "dualheap: " << dh_status_name(status) << ": " << dh_last_error()
            << '\n';
  throw Failure{status == DH_ERR_INVARIANT || status == DH_ERR_INTERNAL ? 2 : 1};
}

dh_swap_strategy swap_of(const std::string& s) {
  dh_swap_strategy out{};
  check(dh_parse_swap(s.c_str(), &out));
  return out;
}
dh_algo algo_of(const std::string& s) {
  dh_algo out{};
  check(dh_parse_algo(s.c_str(), &out));
  return out;
}
dh_pivot pivot_of(const std::string& s) {
  dh_pivot out{};
  check(dh_parse_pivot(s.c_str(), &out));
  return out;
}
dh_dist dist_of(const std::string& s) {
  dh_dist out{};
  check(dh_parse_dist(s.c_str(), &out));
  return out;
}

struct InputArgs {
  std::size_t n = 15;
  std::string dist = "random";
  std::uint64_t seed = 1;
  std::vector<std::int64_t> values;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "Generated input size")->check(CLI::PositiveNumber);
    cmd->add_option("--dist", dist,
                    "random|sorted|reverse|organpipe|allequal|fewvalues");
    cmd->add_option("--seed", seed, "Generator seed");
    cmd->add_option("--values", values, "Explicit input, comma separated")
        ->delimiter(',');
  }

  std::vector<std::int64_t> load() const {
    if (!values.empty()) return values;
    std::vector<std::int64_t> out(n);
    check(dh_generate(dist_of(dist), n, seed, out.data()));
    return out;
  }
};

struct SelectArgs {
  InputArgs input;
  std::optional<std::size_t> k;
  std::string algo = "dhselect";
  std::string swap = "tree";
  int presplit = 1;
  std::string pivot = "first";
  std::size_t workers = 1;
  bool show_array = false;
};

int run_select(const SelectArgs& a) {
  const std::vector<std::int64_t> data = a.input.load();
  const std::size_t n = data.size();
  const std::size_t k = a.k.value_or((n + 1) / 2);

  dh_array* arr = nullptr;
  check(dh_array_create(data.data(), n, &arr));
  std::unique_ptr<dh_array, decltype(&dh_array_destroy)> owner(arr, dh_array_destroy);

  dh_metrics metrics{};
  std::int64_t value = 0;
  std::string variant;
  const dh_algo algo = algo_of(a.algo);
  if (algo == DH_ALGO_DHSELECT) {
    dh_select_options opts;
    dh_select_options_init(&opts);
    opts.strategy = swap_of(a.swap);
    opts.presplit = a.presplit;
    opts.workers = a.workers;
    check(dh_array_select(arr, k, &opts, &value, &metrics));
    variant = a.swap;
  } else {
    const dh_pivot pivot = algo == DH_ALGO_QUICKSELECT_MOM ? DH_PIVOT_MOM
                                                          : pivot_of(a.pivot);
    check(dh_array_quickselect(arr, k, pivot, a.input.seed, &value, &metrics));
    variant = dh_pivot_name(pivot);
  }

  const std::uint64_t compares = metrics.compares_construct +
                                 metrics.compares_swap + metrics.compares_other;
  const std::uint64_t moves =
      metrics.moves_construct + metrics.moves_swap + metrics.moves_other;
  std::cout << "algo,swap_strategy,presplit,n,k,value,compares_construct,"
               "moves_construct,compares_swap,moves_swap,compares_total,"
               "moves_total,partitioned\n"
            << a.algo << ',' << variant << ','
            << (algo == DH_ALGO_DHSELECT ? a.presplit : 0) << ',' << n << ','
            << k << ',' << value << ',' << metrics.compares_construct << ','
            << metrics.moves_construct << ',' << metrics.compares_swap << ','
            << metrics.moves_swap << ',' << compares << ',' << moves << ','
            << (dh_array_verify_partition(arr, k) ? "true" : "false") << '\n';
  if (a.show_array) {
    std::vector<std::int64_t> out(n);
    check(dh_array_read(arr, out.data(), out.size()));
    for (std::size_t i = 0; i < n; ++i) std::cout << (i ? " " : "") << out[i];
    std::cout << '\n';
  }
  return 0;
}

struct SortArgs {
  InputArgs input;
  std::string swap = "tree";
  int presplit = 1;
  std::size_t workers = 1;
  bool stats = false;
};

int run_sort(const SortArgs& a) {
  std::vector<std::int64_t> data = a.input.load();
  dh_select_options opts;
  dh_select_options_init(&opts);
  opts.strategy = swap_of(a.swap);
  opts.presplit = a.presplit;
  opts.workers = a.workers;
  dh_metrics metrics{};
  check(dh_sort(data.data(), data.size(), &opts, &metrics));
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::cout << (i ? " " : "") << data[i];
  }
  std::cout << '\n';
  if (a.stats) {
    std::cerr << "compares_construct=" << metrics.compares_construct
              << " moves_construct=" << metrics.moves_construct
              << " compares_swap=" << metrics.compares_swap
              << " moves_swap=" << metrics.moves_swap << '\n';
  }
  return 0;
}

struct BenchArgs {
  std::vector<std::size_t> sizes{1023, 4095, 16383};
  std::vector<std::string> dists{"random"};
  std::vector<std::string> algos{"dhselect"};
  std::vector<std::string> swaps{"tree"};
  std::vector<int> presplits{1};
  std::vector<std::string> pivots{"random"};
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::size_t k = 0;
  std::size_t workers = 1;
  std::string out = "-";
  bool timing = false;
};

int run_bench(const BenchArgs& a) {
  dh_bench* bench = nullptr;
  check(dh_bench_create(&bench));
  std::unique_ptr<dh_bench, decltype(&dh_bench_destroy)> owner(bench, dh_bench_destroy);

  for (std::size_t n : a.sizes) check(dh_bench_add_size(bench, n));
  for (const auto& d : a.dists) check(dh_bench_add_dist(bench, dist_of(d)));
  for (const auto& name : a.algos) {
    const dh_algo algo = algo_of(name);
    switch (algo) {
      case DH_ALGO_DHSELECT:
        for (const auto& s : a.swaps) {
          for (int p : a.presplits) {
            check(dh_bench_add_variant(bench, algo, swap_of(s), p, DH_PIVOT_FIRST));
          }
        }
        break;
      case DH_ALGO_QUICKSELECT:
        for (const auto& p : a.pivots) {
          check(dh_bench_add_variant(bench, algo, DH_SWAP_TREE, 0, pivot_of(p)));
        }
        break;
      case DH_ALGO_QUICKSELECT_MOM:
        check(dh_bench_add_variant(bench, algo, DH_SWAP_TREE, 0, DH_PIVOT_MOM));
        break;
    }
  }
  check(dh_bench_set_trials(bench, a.trials));
  check(dh_bench_set_seed(bench, a.seed));
  check(dh_bench_set_k(bench, a.k));
  check(dh_bench_set_workers(bench, a.workers));
  check(dh_bench_set_timing(bench, a.timing ? 1 : 0));
  check(dh_bench_run(bench));
  check(dh_bench_write_csv(bench, a.out.c_str()));
  return 0;
}

struct WorstCaseArgs {
  std::string mode = "exhaustive";
  std::size_t max_n = 8;
  std::size_t n = 64;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::string swap = "tree";
  int presplit = 1;
  std::string out = "-";
  bool fit = false;
};

int run_worstcase(const WorstCaseArgs& a) {
  dh_select_options opts;
  dh_select_options_init(&opts);
  opts.strategy = swap_of(a.swap);
  opts.presplit = a.presplit;
  dh_worstcase* wc = nullptr;
  if (a.mode == "exhaustive") {
    check(dh_worstcase_exhaustive(a.max_n, &opts, &wc));
  } else {
    check(dh_worstcase_random(a.n, a.samples, a.seed, &opts, &wc));
  }
  std::unique_ptr<dh_worstcase, decltype(&dh_worstcase_destroy)> owner(
      wc, dh_worstcase_destroy);
  check(dh_worstcase_write_csv(wc, a.out.c_str()));
  if (a.fit) {
    double slope = 0;
    check(dh_worstcase_fit(wc, &slope));
    std::fprintf(stderr, "slope=%.4f\n", slope);
  }
  return 0;
}

struct FitArgs {
  std::string path;
  std::string metric = "compares_swap";
  std::optional<std::string> algo;
  std::optional<std::string> variant;
  int presplit = -1;
};

int run_fit(const FitArgs& a) {
  double slope = 0;
  std::size_t sizes = 0;
  check(dh_fit_csv(a.path.c_str(), a.metric.c_str(),
                   a.algo ? a.algo->c_str() : nullptr,
                   a.variant ? a.variant->c_str() : nullptr, a.presplit, &slope,
                   &sizes));
  std::printf("metric=%s sizes=%zu slope=%.4f\n", a.metric.c_str(), sizes, slope);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dualheap selection, sorting and benchmark harness"};
  app.require_subcommand(1);

  SelectArgs select_args;
  auto* select = app.add_subcommand("select", "Select the k-th smallest value");
  select_args.input.attach(select);
  select->add_option("--k", select_args.k, "1-based rank (default: median)");
  select->add_option("--algo", select_args.algo, "dhselect|quickselect|quickselect-mom");
  select->add_option("--swap", select_args.swap, "tree|branch|root");
  select->add_option("--presplit", select_args.presplit, "0|1|2")
      ->check(CLI::Range(0, 2));
  select->add_option("--pivot", select_args.pivot, "first|random (quickselect)");
  select->add_option("--workers", select_args.workers, "Heap-build workers (power of two)");
  select->add_flag("--show-array", select_args.show_array,
                   "Print the partitioned array");

  SortArgs sort_args;
  auto* sort = app.add_subcommand("sort", "Sort by recursive dualheap partitioning");
  sort_args.input.attach(sort);
  sort->add_option("--swap", sort_args.swap, "tree|branch|root");
  sort->add_option("--presplit", sort_args.presplit, "0|1|2")->check(CLI::Range(0, 2));
  sort->add_option("--workers", sort_args.workers, "Heap-build workers (power of two)");
  sort->add_flag("--stats", sort_args.stats, "Print counters to stderr");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run benchmark trials and emit CSV");
  bench->add_option("--sizes", bench_args.sizes, "Input sizes")->delimiter(',');
  bench->add_option("--dist", bench_args.dists, "Distributions")->delimiter(',');
  bench->add_option("--algo", bench_args.algos, "Algorithms")->delimiter(',');
  bench->add_option("--swap", bench_args.swaps, "Swap strategies (dhselect)")
      ->delimiter(',');
  bench->add_option("--presplit", bench_args.presplits, "Pre-split counts (dhselect)")
      ->delimiter(',');
  bench->add_option("--pivot", bench_args.pivots, "Pivot rules (quickselect)")
      ->delimiter(',');
  bench->add_option("--trials", bench_args.trials, "Trials per configuration");
  bench->add_option("--seed", bench_args.seed, "Base seed; trial t uses seed + t");
  bench->add_option("--k", bench_args.k, "Fixed 1-based rank (default: median)");
  bench->add_option("--workers", bench_args.workers, "Heap-build workers (power of two)");
  bench->add_option("--out", bench_args.out, "Output path, - for stdout");
  bench->add_flag("--timing", bench_args.timing, "Record wall-clock elapsed_ns");

  WorstCaseArgs wc_args;
  auto* worstcase = app.add_subcommand("worstcase", "Search for costly swapping phases");
  worstcase->add_option("--mode", wc_args.mode, "exhaustive|random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  worstcase->add_option("--max-n", wc_args.max_n, "Largest n for exhaustive mode (<= 9)");
  worstcase->add_option("--n", wc_args.n, "Size for random mode");
  worstcase->add_option("--samples", wc_args.samples, "Samples for random mode");
  worstcase->add_option("--seed", wc_args.seed, "Seed for random mode");
  worstcase->add_option("--swap", wc_args.swap, "tree|branch|root");
  worstcase->add_option("--presplit", wc_args.presplit, "0|1|2")->check(CLI::Range(0, 2));
  worstcase->add_option("--out", wc_args.out, "Output path, - for stdout");
  worstcase->add_flag("--fit", wc_args.fit, "Print the log-log slope of the maxima");

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Fit log-log growth of a metric from bench CSV");
  fit->add_option("csv", fit_args.path, "Bench CSV file")->required();
  fit->add_option("--metric", fit_args.metric, "Counter column to fit");
  fit->add_option("--algo", fit_args.algo, "Keep only this algo");
  fit->add_option("--swap", fit_args.variant, "Keep only this swap_strategy value");
  fit->add_option("--presplit", fit_args.presplit, "Keep only this presplit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*select) return run_select(select_args);
    if (*sort) return run_sort(sort_args);
    if (*bench) return run_bench(bench_args);
    if (*worstcase) return run_worstcase(wc_args);
    if (*fit) return run_fit(fit_args);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return 1;
}
