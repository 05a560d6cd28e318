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

#ifndef DUALHEAP_BASELINES_HPP_
#define DUALHEAP_BASELINES_HPP_

// Reference selection algorithms: quickselect with a first-element or
// random pivot, quickselect with a median-of-medians pivot, and a sort-based
// oracle. All counted routines work on a sentinel window (payload at slots
// 1..n) and charge their counts to whatever phase is active.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualheap/errors.hpp"
#include "dualheap/metrics.hpp"
#include "dualheap/random.hpp"

namespace dualheap {

enum class PivotKind { first, random, median_of_medians };

struct PivotRule {
  PivotKind kind = PivotKind::first;
  std::uint64_t seed = 0;  // random only
};

inline std::string_view to_string(PivotKind p) {
  switch (p) {
    case PivotKind::first: return "first";
    case PivotKind::random: return "random";
    case PivotKind::median_of_medians: return "mom";
  }
  return "?";
}

inline std::optional<PivotKind> parse_pivot_kind(std::string_view s) {
  if (s == "first") return PivotKind::first;
  if (s == "random") return PivotKind::random;
  if (s == "mom") return PivotKind::median_of_medians;
  return std::nullopt;
}

namespace detail {

inline void check_rank(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw OutOfRange("selection index " + std::to_string(k) +
                     " outside 1.." + std::to_string(n));
  }
}

template <class T>
void insertion_sort(std::span<T> w, std::size_t lo, std::size_t hi,
                    Metrics& metrics) {
  for (std::size_t i = lo + 1; i <= hi; ++i) {
    const T v = w[i];
    std::size_t j = i;
    while (j > lo && metrics.greater(w[j - 1], v)) {
      metrics.move(w[j], w[j - 1]);
      --j;
    }
    if (j != i) metrics.move(w[j], v);
  }
}

}  // namespace detail

// Hoare crossing scan over slots lo..hi. Returns j with every slot in lo..j
// holding a value <= pivot and every slot in j+1..hi a value >= pivot.
// When the pivot value sits at slot lo and lo < hi, lo <= j < hi.
template <class T>
std::size_t hoare_partition(std::span<T> w, std::size_t lo, std::size_t hi,
                            const T& pivot, Metrics& metrics) {
  std::size_t i = lo - 1;
  std::size_t j = hi + 1;
  for (;;) {
    do {
      ++i;
    } while (metrics.less(w[i], pivot));
    do {
      --j;
    } while (metrics.greater(w[j], pivot));
    if (i >= j) return j;
    metrics.exchange(w[i], w[j]);
  }
}

template <class T>
T quickselect_mom(std::span<T> w, std::size_t k, Metrics& metrics);

namespace detail {

template <class T>
T select_range_mom(std::span<T> w, std::size_t lo, std::size_t hi,
                   std::size_t k, Metrics& metrics);

// Leaves the median-of-medians of lo..hi at the returned slot.
template <class T>
std::size_t median_of_medians_slot(std::span<T> w, std::size_t lo,
                                   std::size_t hi, Metrics& metrics) {
  const std::size_t len = hi - lo + 1;
  if (len <= 25) {
    insertion_sort(w, lo, hi, metrics);
    return lo + (len - 1) / 2;
  }
  std::size_t groups = 0;
  for (std::size_t g = lo; g <= hi; g += 5, ++groups) {
    const std::size_t g_hi = std::min(g + 4, hi);
    insertion_sort(w, g, g_hi, metrics);
    const std::size_t median = g + (g_hi - g) / 2;
    if (median != lo + groups) metrics.exchange(w[lo + groups], w[median]);
  }
  const std::size_t target = lo + (groups - 1) / 2;
  select_range_mom(w, lo, lo + groups - 1, target, metrics);
  return target;
}

template <class T>
T select_range_mom(std::span<T> w, std::size_t lo, std::size_t hi,
                   std::size_t k, Metrics& metrics) {
  while (lo < hi) {
    const std::size_t p = median_of_medians_slot(w, lo, hi, metrics);
    if (p != lo) metrics.exchange(w[lo], w[p]);
    const T pivot = w[lo];
    const std::size_t j = hoare_partition(w, lo, hi, pivot, metrics);
    if (k <= j) {
      hi = j;
    } else {
      lo = j + 1;
    }
  }
  return w[k];
}

}  // namespace detail

// Groups of five, each median found by insertion sort, then the exact median
// of those medians by recursive selection. Segments of at most 25 are sorted
// outright. Rearranges lo..hi.
template <class T>
T median_of_medians(std::span<T> w, std::size_t lo, std::size_t hi,
                    Metrics& metrics) {
  if (lo < 1 || hi < lo || hi + 1 >= w.size()) {
    throw InvalidArgument("median_of_medians needs a non-empty segment");
  }
  return w[detail::median_of_medians_slot(w, lo, hi, metrics)];
}

// Plain quickselect. Only the side containing k is pursued.
template <class T>
T quickselect(std::span<T> w, std::size_t k, const PivotRule& rule,
              Metrics& metrics) {
  const std::size_t n = w.size() < 2 ? 0 : w.size() - 2;
  detail::check_rank(k, n);
  if (rule.kind == PivotKind::median_of_medians) {
    return quickselect_mom(w, k, metrics);
  }
  SplitMix64 rng(rule.seed);
  std::size_t lo = 1;
  std::size_t hi = n;
  while (lo < hi) {
    if (rule.kind == PivotKind::random) {
      const std::size_t p = lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
      if (p != lo) metrics.exchange(w[lo], w[p]);
    }
    const T pivot = w[lo];
    const std::size_t j = hoare_partition(w, lo, hi, pivot, metrics);
    if (k <= j) {
      hi = j;
    } else {
      lo = j + 1;
    }
  }
  return w[k];
}

template <class T>
T quickselect_mom(std::span<T> w, std::size_t k, Metrics& metrics) {
  const std::size_t n = w.size() < 2 ? 0 : w.size() - 2;
  detail::check_rank(k, n);
  return detail::select_range_mom(w, 1, n, k, metrics);
}

// Ground truth: k-th smallest of a sorted copy. Never counted.
template <class T>
T oracle_select(std::span<const T> input, std::size_t k) {
  detail::check_rank(k, input.size());
  std::vector<T> copy(input.begin(), input.end());
  std::sort(copy.begin(), copy.end());
  return copy[k - 1];
}

}  // namespace dualheap

#endif  // DUALHEAP_BASELINES_HPP_
