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

#include <algorithm>
#include <numeric>

#include "dualheap/bench.hpp"
#include "dualheap/random.hpp"

namespace dualheap {

namespace {

// Runs one instance; returns swapping-phase comparisons.
std::uint64_t swap_cost(std::span<const Element> perm, std::size_t k,
                        const SelectOptions& opts,
                        std::vector<Element>& scratch) {
  scratch.assign(perm.size() + 2, 0);
  std::copy(perm.begin(), perm.end(), scratch.begin() + 1);
  scratch.front() = 1;
  scratch.back() = static_cast<Element>(perm.size());
  Metrics metrics;
  dh_select(std::span<Element>(scratch), k, opts, metrics);
  return metrics.compares_swap;
}

void consider(WorstCaseReport& report, std::uint64_t cost,
              std::span<const Element> perm, std::size_t k) {
  ++report.instances_tested;
  if (report.instances_tested == 1 || cost > report.max_compares_swap) {
    report.max_compares_swap = cost;
    report.argmax_permutation.assign(perm.begin(), perm.end());
    report.argmax_k = k;
  }
}

}  // namespace

std::vector<WorstCaseReport> worst_case_exhaustive(std::size_t max_n,
                                                   const SelectOptions& opts) {
  validate(opts);
  if (max_n < 1 || max_n > 9) {
    throw InvalidArgument("exhaustive search is limited to 1 <= n <= 9");
  }
  std::vector<WorstCaseReport> reports;
  std::vector<Element> scratch;
  for (std::size_t n = 1; n <= max_n; ++n) {
    WorstCaseReport report;
    report.n = n;
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{1});
    do {
      for (std::size_t k = 1; k <= n; ++k) {
        consider(report, swap_cost(perm, k, opts, scratch), perm, k);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    reports.push_back(std::move(report));
  }
  return reports;
}

WorstCaseReport worst_case_random(std::size_t n, std::size_t samples,
                                  std::uint64_t seed,
                                  const SelectOptions& opts) {
  validate(opts);
  if (n < 1) throw InvalidArgument("input size must be at least 1");
  WorstCaseReport report;
  report.n = n;
  SplitMix64 rng(seed);
  std::vector<Element> perm(n);
  std::vector<Element> scratch;
  for (std::size_t s = 0; s < samples; ++s) {
    std::iota(perm.begin(), perm.end(), Element{1});
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[static_cast<std::size_t>(rng.below(i + 1))]);
    }
    const std::size_t k = 1 + static_cast<std::size_t>(rng.below(n));
    consider(report, swap_cost(perm, k, opts, scratch), perm, k);
  }
  return report;
}

}  // namespace dualheap
