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

#ifndef DUALHEAP_SELECTOR_HPP_
#define DUALHEAP_SELECTOR_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dualheap/errors.hpp"
#include "dualheap/heap.hpp"
#include "dualheap/metrics.hpp"
#include "dualheap/swap.hpp"

namespace dualheap {

// Payload at logical positions 1..n, guarded by a low sentinel at 0 and a
// high sentinel at n+1. The sentinels are the payload minimum and maximum.
template <class T>
class SentinelArray {
 public:
  static SentinelArray prepare(std::span<const T> input) {
    if (input.empty()) throw EmptyInput("cannot select from an empty input");
    const auto [lo, hi] = std::minmax_element(input.begin(), input.end());
    SentinelArray out;
    out.buffer_.reserve(input.size() + 2);
    out.buffer_.push_back(*lo);
    out.buffer_.insert(out.buffer_.end(), input.begin(), input.end());
    out.buffer_.push_back(*hi);
    return out;
  }

  std::size_t size() const noexcept { return buffer_.size() - 2; }

  T& operator[](std::size_t pos) { return buffer_[pos]; }
  const T& operator[](std::size_t pos) const { return buffer_[pos]; }

  std::span<T> window() noexcept { return buffer_; }
  std::span<const T> window() const noexcept { return buffer_; }
  std::span<const T> payload() const noexcept {
    return std::span<const T>(buffer_).subspan(1, size());
  }

 private:
  SentinelArray() = default;
  std::vector<T> buffer_;
};

template <class T>
SentinelArray<T> prepare_buffer(std::span<const T> input) {
  return SentinelArray<T>::prepare(input);
}

struct SelectOptions {
  SwapStrategy strategy = SwapStrategy::tree;
  // Number of whole-array heap builds before the split: 0, 1 or 2.
  int presplit = 1;
  // Workers for the whole-array min-heap build. Used only when the segment
  // length is 2^m - 1 and the count is a power of two no larger than 2^m.
  std::size_t workers = 1;
};

inline void validate(const SelectOptions& opts) {
  if (opts.presplit < 0 || opts.presplit > 2) {
    throw InvalidArgument("presplit must be 0, 1 or 2, got " +
                          std::to_string(opts.presplit));
  }
  if (opts.workers == 0 || !std::has_single_bit(opts.workers)) {
    throw InvalidArgument("worker count must be a power of two, got " +
                          std::to_string(opts.workers));
  }
}

template <class T>
struct SelectOutcome {
  T value;
  std::size_t split;  // small heap size
  std::size_t swap_steps;
};

// Instrumentation points inside dh_select, used by test suites to audit
// intermediate states. Costs are the comparisons spent by that build alone.
template <class T>
class SelectObserver {
 public:
  virtual ~SelectObserver() = default;
  virtual void on_min_build(const LargeHeapView<T>&, std::uint64_t) {}
  virtual void on_max_build(const SmallHeapView<T>&, std::uint64_t) {}
  virtual void on_swapped(const DualHeap<T>&) {}
};

namespace detail {

inline bool parallel_applies(const SelectOptions& opts, std::size_t n) {
  if (opts.workers <= 1 || !std::has_single_bit(n + 1)) return false;
  return std::countr_zero(opts.workers) <= std::countr_zero(n + 1);
}

}  // namespace detail

// Finds the k-th smallest (1-based) of the n payload slots of `window`
// (size n + 2, sentinels at both ends) and leaves the window partitioned:
// slots before k hold values <= it, slots after k hold values >= it.
template <class T>
SelectOutcome<T> dh_select(std::span<T> window, std::size_t k,
                           const SelectOptions& opts, Metrics& metrics,
                           SelectObserver<T>* observer = nullptr) {
  validate(opts);
  if (window.size() < 3) throw EmptyInput("cannot select from an empty input");
  const std::size_t n = window.size() - 2;
  const Split split = split_indices(n, k);

  {
    PhaseScope scope(metrics, Phase::construct);
    auto run_min_build = [&](const LargeHeapView<T>& view, bool parallel) {
      const std::uint64_t before = metrics.compares_construct;
      if (parallel) {
        build_min_heap_parallel(view, opts.workers, metrics);
      } else {
        build_min_heap(view, metrics);
      }
      if (observer) {
        observer->on_min_build(view, metrics.compares_construct - before);
      }
    };
    auto run_max_build = [&](const SmallHeapView<T>& view) {
      const std::uint64_t before = metrics.compares_construct;
      build_max_heap(view, metrics);
      if (observer) {
        observer->on_max_build(view, metrics.compares_construct - before);
      }
    };

    if (opts.presplit >= 1) {
      run_min_build(LargeHeapView<T>(window, 0, n),
                detail::parallel_applies(opts, n));
    }
    if (opts.presplit >= 2) {
      run_max_build(SmallHeapView<T>(window, n + 1, n));
    }
    DualHeap<T> dh = DualHeap<T>::over(window, split.small_size);
    run_max_build(dh.small);
    run_min_build(dh.large, false);
  }

  DualHeap<T> dh = DualHeap<T>::over(window, split.small_size);
  const std::size_t steps = run_swapping_phase(dh, opts.strategy, metrics);
  if (observer) observer->on_swapped(dh);
  return {window[k], split.small_size, steps};
}

template <class T>
SelectOutcome<T> dh_select(SentinelArray<T>& arr, std::size_t k,
                           const SelectOptions& opts, Metrics& metrics,
                           SelectObserver<T>* observer = nullptr) {
  return dh_select(arr.window(), k, opts, metrics, observer);
}

// Copying convenience wrapper.
template <class T>
T dh_select_copy(std::span<const T> input, std::size_t k,
                 const SelectOptions& opts, Metrics& metrics) {
  SentinelArray<T> arr = SentinelArray<T>::prepare(input);
  return dh_select(arr, k, opts, metrics).value;
}

template <class T>
bool verify_partition(std::span<const T> window, std::size_t k) {
  if (window.size() < 3) return false;
  const std::size_t n = window.size() - 2;
  if (k < 1 || k > n) return false;
  const T& pivot = window[k];
  for (std::size_t i = 1; i < k; ++i) {
    if (pivot < window[i]) return false;
  }
  for (std::size_t i = k + 1; i <= n; ++i) {
    if (window[i] < pivot) return false;
  }
  return true;
}

template <class T>
bool verify_partition(const SentinelArray<T>& arr, std::size_t k) {
  return verify_partition(arr.window(), k);
}

// Sorts by partitioning each segment about its middle address,
// k = ceil(len / 2). A segment's neighbours (an already placed element or a
// global sentinel) act as its sentinels. Left segments are finished before
// right ones; an explicit stack bounds native call depth.
template <class T>
std::vector<T> dh_sort(std::span<const T> input, const SelectOptions& opts,
                       Metrics& metrics) {
  validate(opts);
  if (input.empty()) return {};
  SentinelArray<T> arr = SentinelArray<T>::prepare(input);
  std::span<T> all = arr.window();

  std::vector<std::pair<std::size_t, std::size_t>> pending;  // [lo, hi]
  pending.emplace_back(1, input.size());
  while (!pending.empty()) {
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    if (hi <= lo) continue;
    const std::size_t len = hi - lo + 1;
    const std::size_t k = (len + 1) / 2;
    dh_select(all.subspan(lo - 1, len + 2), k, opts, metrics);
    const std::size_t mid = lo + k - 1;
    pending.emplace_back(mid + 1, hi);
    if (mid > lo) pending.emplace_back(lo, mid - 1);
  }
  const auto payload = arr.payload();
  return {payload.begin(), payload.end()};
}

}  // namespace dualheap

#endif  // DUALHEAP_SELECTOR_HPP_
