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

#include <chrono>
#include <sstream>
#include <string>

#include "dualheap/baselines.hpp"
#include "dualheap/bench.hpp"
#include "dualheap/selector.hpp"

namespace dualheap {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::dhselect: return "dhselect";
    case Algorithm::quickselect: return "quickselect";
    case Algorithm::quickselect_mom: return "quickselect-mom";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view s) {
  if (s == "dhselect") return Algorithm::dhselect;
  if (s == "quickselect") return Algorithm::quickselect;
  if (s == "quickselect-mom") return Algorithm::quickselect_mom;
  return std::nullopt;
}

std::string Variant::label() const {
  switch (algo) {
    case Algorithm::dhselect: return std::string(to_string(strategy));
    case Algorithm::quickselect: return std::string(to_string(pivot));
    case Algorithm::quickselect_mom: return "mom";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kPivotSeedMix = 0xD1B54A32D192ED03ULL;

std::string reproduction_line(const ExperimentRecord& r) {
  std::ostringstream os;
  os << "oracle mismatch: algo=" << r.algo << " variant=" << r.swap_strategy
     << " presplit=" << r.presplit << " n=" << r.n << " k=" << r.k
     << " dist=" << r.dist << " seed=" << r.seed;
  return os.str();
}

}  // namespace

ExperimentRecord run_trial(const Variant& variant, const InputSpec& input,
                           std::size_t k, std::size_t trial,
                           std::size_t workers, bool timing) {
  const std::vector<Element> data = generate(input);
  const Element expected = oracle_select<Element>(data, k);

  ExperimentRecord rec;
  rec.algo = std::string(to_string(variant.algo));
  rec.swap_strategy = variant.label();
  rec.presplit = variant.algo == Algorithm::dhselect ? variant.presplit : 0;
  rec.n = input.n;
  rec.k = k;
  rec.dist = std::string(to_string(input.dist));
  rec.seed = input.seed;
  rec.trial = trial;

  SentinelArray<Element> arr = SentinelArray<Element>::prepare(data);
  Metrics metrics;
  const auto start = std::chrono::steady_clock::now();
  Element value = 0;
  bool partitioned = true;
  switch (variant.algo) {
    case Algorithm::dhselect: {
      SelectOptions opts;
      opts.strategy = variant.strategy;
      opts.presplit = variant.presplit;
      opts.workers = workers;
      value = dh_select(arr, k, opts, metrics).value;
      partitioned = verify_partition(arr, k);
      break;
    }
    case Algorithm::quickselect:
      value = quickselect(arr.window(), k,
                          PivotRule{variant.pivot, input.seed ^ kPivotSeedMix},
                          metrics);
      break;
    case Algorithm::quickselect_mom:
      value = quickselect_mom(arr.window(), k, metrics);
      break;
  }
  const auto stop = std::chrono::steady_clock::now();

  rec.compares_construct = metrics.compares_construct;
  rec.moves_construct = metrics.moves_construct;
  rec.compares_swap = metrics.compares_swap;
  rec.moves_swap = metrics.moves_swap;
  rec.compares_total = metrics.compares_total();
  rec.moves_total = metrics.moves_total();
  if (timing) {
    rec.elapsed_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
            .count());
  }
  rec.correct = value == expected && partitioned;
  return rec;
}

std::vector<ExperimentRecord> run_benchmark(const BenchConfig& config) {
  std::vector<ExperimentRecord> rows;
  for (std::size_t n : config.sizes) {
    const std::size_t k = config.k.value_or((n + 1) / 2);
    if (n == 0 || k < 1 || k > n) {
      throw OutOfRange("selection index " + std::to_string(k) +
                       " outside 1.." + std::to_string(n));
    }
    for (Distribution dist : config.dists) {
      for (const Variant& variant : config.variants) {
        for (std::size_t t = 0; t < config.trials; ++t) {
          const InputSpec input{n, dist, trial_seed(config.seed, t)};
          ExperimentRecord rec =
              run_trial(variant, input, k, t, config.workers, config.timing);
          if (!rec.correct) throw InvariantViolation(reproduction_line(rec));
          rows.push_back(std::move(rec));
        }
      }
    }
  }
  return rows;
}

}  // namespace dualheap
