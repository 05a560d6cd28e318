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

#ifndef DUALHEAP_BENCH_HPP_
#define DUALHEAP_BENCH_HPP_

// Benchmark harness: seeded input generators, the trial runner behind the
// `bench` subcommand, exhaustive and sampled worst-case search over the
// swapping phase, and log-log growth fitting.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualheap/baselines.hpp"
#include "dualheap/selector.hpp"
#include "dualheap/swap.hpp"

namespace dualheap {

using Element = std::int64_t;

enum class Distribution { random, sorted, reverse, organpipe, allequal, fewvalues };

std::string_view to_string(Distribution d);
std::optional<Distribution> parse_distribution(std::string_view s);

struct InputSpec {
  std::size_t n = 0;
  Distribution dist = Distribution::random;
  std::uint64_t seed = 0;
};

// random    Fisher-Yates over 1..n: for i = n-1 down to 1, swap slot i with
//           slot next() % (i + 1) of a SplitMix64 stream seeded with `seed`.
// sorted    1..n          reverse    n..1
// organpipe 1..ceil(n/2) then back down, value(i) = min(i + 1, n - i)
// allequal  all 1         fewvalues  (i mod 4) + 1
// (i is the 0-based position.)
std::vector<Element> generate(const InputSpec& spec);

enum class Algorithm { dhselect, quickselect, quickselect_mom };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view s);

// One algorithm configuration. `strategy`/`presplit` apply to dhselect,
// `pivot` to quickselect.
struct Variant {
  Algorithm algo = Algorithm::dhselect;
  SwapStrategy strategy = SwapStrategy::tree;
  int presplit = 1;
  PivotKind pivot = PivotKind::first;

  // Value written to the CSV swap_strategy column: the swap strategy for
  // dhselect, the pivot rule for quickselect, "mom" for quickselect-mom.
  std::string label() const;
};

struct BenchConfig {
  std::vector<std::size_t> sizes{1023, 4095, 16383};
  std::vector<Distribution> dists{Distribution::random};
  std::vector<Variant> variants{Variant{}};
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::optional<std::size_t> k;  // default: ceil(n / 2)
  std::size_t workers = 1;
  bool timing = false;  // elapsed_ns is 0 unless set
};

struct ExperimentRecord {
  std::string algo;
  std::string swap_strategy;
  int presplit = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string dist;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::uint64_t compares_construct = 0;
  std::uint64_t moves_construct = 0;
  std::uint64_t compares_swap = 0;
  std::uint64_t moves_swap = 0;
  std::uint64_t compares_total = 0;
  std::uint64_t moves_total = 0;
  std::uint64_t elapsed_ns = 0;
  bool correct = false;

  friend bool operator==(const ExperimentRecord&,
                         const ExperimentRecord&) = default;
};

// Seed used for trial t of a run with base seed s.
inline std::uint64_t trial_seed(std::uint64_t base, std::size_t trial) {
  return base + trial;
}

// Runs one trial and oracle-checks it. `record.correct` reports the check.
ExperimentRecord run_trial(const Variant& variant, const InputSpec& input,
                           std::size_t k, std::size_t trial,
                           std::size_t workers, bool timing);

// Rows come out ordered by size, distribution, variant, trial. Throws
// InvariantViolation carrying a reproduction line on any oracle mismatch.
std::vector<ExperimentRecord> run_benchmark(const BenchConfig& config);

inline constexpr std::string_view kCsvHeader =
    "algo,swap_strategy,presplit,n,k,dist,seed,trial,compares_construct,"
    "moves_construct,compares_swap,moves_swap,compares_total,moves_total,"
    "elapsed_ns,correct";

void emit_csv(std::span<const ExperimentRecord> records, std::ostream& out);
void emit_csv(std::span<const ExperimentRecord> records,
              const std::string& path);
std::vector<ExperimentRecord> parse_csv(std::istream& in);

struct WorstCaseReport {
  std::size_t n = 0;
  std::uint64_t instances_tested = 0;
  std::uint64_t max_compares_swap = 0;
  std::vector<Element> argmax_permutation;
  std::size_t argmax_k = 0;
};

// Every permutation of 1..n and every k, for n = 1..max_n (max_n <= 9).
// Ties keep the lexicographically first witness.
std::vector<WorstCaseReport> worst_case_exhaustive(std::size_t max_n,
                                                   const SelectOptions& opts);

// `samples` draws from one SplitMix64 stream: shuffle 1..n as in generate(),
// then k = 1 + next() % n.
WorstCaseReport worst_case_random(std::size_t n, std::size_t samples,
                                  std::uint64_t seed,
                                  const SelectOptions& opts);

inline constexpr std::string_view kWorstCaseHeader =
    "n,instances_tested,max_compares_swap,argmax_k,argmax_permutation";

void emit_worstcase_csv(std::span<const WorstCaseReport> reports,
                        std::ostream& out);

struct GrowthPoint {
  double n = 0;
  double value = 0;
};

// Least-squares slope of log(value) against log(n). Needs at least three
// distinct sizes and positive values.
double fit_growth(std::span<const GrowthPoint> points);

// Per-size means of `metric` (any counter column or elapsed_ns).
double fit_growth(std::span<const ExperimentRecord> records,
                  std::string_view metric);

// Per-size maxima of the swapping-phase comparisons.
double fit_growth(std::span<const WorstCaseReport> reports);

std::vector<GrowthPoint> mean_by_size(std::span<const ExperimentRecord> records,
                                      std::string_view metric);

}  // namespace dualheap

#endif  // DUALHEAP_BENCH_HPP_
