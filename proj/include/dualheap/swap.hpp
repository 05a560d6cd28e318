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

#ifndef DUALHEAP_SWAP_HPP_
#define DUALHEAP_SWAP_HPP_

// The swapping phase: exchanges values between the small heap and the large
// heap until the small root is no greater than the large root. With both heap
// conditions intact, that single comparison certifies that every small-side
// value is <= every large-side value.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "dualheap/errors.hpp"
#include "dualheap/heap.hpp"
#include "dualheap/metrics.hpp"

namespace dualheap {

enum class SwapStrategy { tree, branch, root };

inline std::string_view to_string(SwapStrategy s) {
  switch (s) {
    case SwapStrategy::tree: return "tree";
    case SwapStrategy::branch: return "branch";
    case SwapStrategy::root: return "root";
  }
  return "?";
}

inline std::optional<SwapStrategy> parse_swap_strategy(std::string_view s) {
  if (s == "tree") return SwapStrategy::tree;
  if (s == "branch") return SwapStrategy::branch;
  if (s == "root") return SwapStrategy::root;
  return std::nullopt;
}

// Two opposing heaps over a window of n + 2 slots (sentinels at 0 and n+1):
// the small heap occupies slots 1..shn with its root at slot shn, the large
// heap occupies slots shn+1..n with its root at slot shn+1.
template <class T>
struct DualHeap {
  SmallHeapView<T> small;
  LargeHeapView<T> large;

  static DualHeap over(std::span<T> window, std::size_t small_size) {
    const std::size_t n = window.size() - 2;
    return {SmallHeapView<T>(window, small_size + 1, small_size),
            LargeHeapView<T>(window, small_size, n - small_size)};
  }

  std::size_t size() const noexcept { return small.size() + large.size(); }
};

// Greedy two-dimensional exchange. Descends to the largest child of ks and
// the smallest child of kl; if they are inverted, recurses on them and then
// on their siblings if those are still inverted. On the way back up the pair
// (ks, kl) is exchanged and both nodes are re-sifted.
//
// When jl is the last large node, jl ^ 1 is one past the heap and reads the
// high sentinel, which keeps the sibling guard false.
template <class T>
void tree_swap(DualHeap<T>& dh, std::size_t ks, std::size_t kl,
               Metrics& metrics) {
  const SmallHeapView<T>& s = dh.small;
  const LargeHeapView<T>& l = dh.large;
  std::size_t js = 2 * ks;
  std::size_t jl = 2 * kl;
  if (js <= s.size() && jl <= l.size()) {
    js += metrics.greater(s[js + 1], s[js]) ? 1 : 0;
    jl += metrics.less(l[jl + 1], l[jl]) ? 1 : 0;
    if (metrics.greater(s[js], l[jl])) {
      tree_swap(dh, js, jl, metrics);
      if (metrics.greater(s[js ^ 1], l[jl ^ 1])) {
        tree_swap(dh, js ^ 1, jl ^ 1, metrics);
      }
    }
  }
  metrics.exchange(s[ks], l[kl]);
  if (ks <= s.size() / 2) sift_down_max(s, ks, metrics);
  if (kl <= l.size() / 2) sift_down_min(l, kl, metrics);
}

// One-dimensional variant: follows a single greedy path while the pair stays
// inverted, then exchanges pairs bottom-up back to the roots.
template <class T>
void branch_swap(DualHeap<T>& dh, Metrics& metrics) {
  const SmallHeapView<T>& s = dh.small;
  const LargeHeapView<T>& l = dh.large;
  std::size_t ks = 1;
  std::size_t kl = 1;
  for (std::size_t js = 2, jl = 2; js <= s.size() && jl <= l.size();
       ks = js, kl = jl, js *= 2, jl *= 2) {
    js += metrics.greater(s[js + 1], s[js]) ? 1 : 0;
    jl += metrics.less(l[jl + 1], l[jl]) ? 1 : 0;
    if (!metrics.greater(s[js], l[jl])) break;
  }
  for (; kl >= 1; ks /= 2, kl /= 2) {
    metrics.exchange(s[ks], l[kl]);
    if (ks <= s.size() / 2) sift_down_max(s, ks, metrics);
    if (kl <= l.size() / 2) sift_down_min(l, kl, metrics);
  }
}

// Zero-dimensional variant: exchange the roots and re-sift both.
template <class T>
void root_swap(DualHeap<T>& dh, Metrics& metrics) {
  metrics.exchange(dh.small[1], dh.large[1]);
  sift_down_max(dh.small, 1, metrics);
  if (dh.large.size() >= 1) sift_down_min(dh.large, 1, metrics);
}

// Upper bound on outer-loop iterations: n * (1 + ceil(log2(n + 1))).
inline std::size_t swap_step_budget(std::size_t n) {
  std::size_t log = 0;
  while ((std::size_t{1} << log) < n + 1) ++log;
  return n * (1 + log);
}

// Runs the outer loop until small root <= large root. Counts accrue to the
// swap phase, guard comparisons included. Returns the iteration count.
template <class T>
std::size_t run_swapping_phase(DualHeap<T>& dh, SwapStrategy strategy,
                               Metrics& metrics) {
  PhaseScope scope(metrics, Phase::swap);
  const std::size_t budget = swap_step_budget(dh.size());
  std::size_t steps = 0;
  while (metrics.greater(dh.small[1], dh.large[1])) {
    if (++steps > budget) {
      throw InvariantViolation("swapping phase exceeded its step budget of " +
                               std::to_string(budget));
    }
    switch (strategy) {
      case SwapStrategy::tree: tree_swap(dh, 1, 1, metrics); break;
      case SwapStrategy::branch: branch_swap(dh, metrics); break;
      case SwapStrategy::root: root_swap(dh, metrics); break;
    }
  }
  return steps;
}

}  // namespace dualheap

#endif  // DUALHEAP_SWAP_HPP_
