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

#ifndef DUALHEAP_HEAP_HPP_
#define DUALHEAP_HEAP_HPP_

// Binary heaps addressed with 1-based node indices over a sentinel-guarded
// buffer. Node j has children 2j and 2j+1.
//
// LargeHeapView is min-rooted and grows upward from its base: node j lives at
// slot base + j. SmallHeapView is max-rooted and mirrored: node k lives at
// slot base - k, so its root sits at the top of its region. Placing a small
// heap directly below a large heap puts the two roots side by side.
//
// Child selection reads the slot just past the last node when that node is
// a left child. For a LargeHeapView that slot must hold a value >= every
// heap value; for a SmallHeapView it must hold a value <= every heap value.

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dualheap/errors.hpp"
#include "dualheap/metrics.hpp"

namespace dualheap {

template <class T>
class LargeHeapView {
 public:
  LargeHeapView(std::span<T> slots, std::size_t base, std::size_t size)
      : slots_(slots), base_(base), size_(size) {
    if (base + size + 2 > slots.size()) {
      throw InvalidArgument("large heap view overruns its buffer");
    }
  }

  T& operator[](std::size_t j) const {
    assert(j >= 1 && base_ + j < slots_.size());
    return slots_[base_ + j];
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t base() const noexcept { return base_; }
  std::span<T> slots() const noexcept { return slots_; }

 private:
  std::span<T> slots_;
  std::size_t base_;
  std::size_t size_;
};

template <class T>
class SmallHeapView {
 public:
  SmallHeapView(std::span<T> slots, std::size_t base, std::size_t size)
      : slots_(slots), base_(base), size_(size) {
    if (base >= slots.size() || base < size + 1) {
      throw InvalidArgument("small heap view overruns its buffer");
    }
  }

  T& operator[](std::size_t k) const {
    assert(k >= 1 && k <= base_);
    return slots_[base_ - k];
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t base() const noexcept { return base_; }
  std::span<T> slots() const noexcept { return slots_; }

 private:
  std::span<T> slots_;
  std::size_t base_;
  std::size_t size_;
};

// Sinks node k of a min-rooted heap. Equal children resolve to the left one.
template <class T>
void sift_down_min(const LargeHeapView<T>& heap, std::size_t k,
                   Metrics& metrics) {
  assert(k >= 1 && k <= heap.size());
  const std::size_t n = heap.size();
  std::size_t j = 2 * k;
  if (j > n) return;
  const T v = heap[k];
  j += metrics.less(heap[j + 1], heap[j]) ? 1 : 0;
  if (!metrics.less(heap[j], v)) return;
  do {
    metrics.move(heap[k], heap[j]);
    k = j;
    j = 2 * k;
    if (j > n) break;
    j += metrics.less(heap[j + 1], heap[j]) ? 1 : 0;
  } while (metrics.less(heap[j], v));
  metrics.move(heap[k], v);
}

// Mirror image of sift_down_min for the max-rooted heap.
template <class T>
void sift_down_max(const SmallHeapView<T>& heap, std::size_t k,
                   Metrics& metrics) {
  assert(k >= 1 && k <= heap.size());
  const std::size_t n = heap.size();
  std::size_t j = 2 * k;
  if (j > n) return;
  const T v = heap[k];
  j += metrics.greater(heap[j + 1], heap[j]) ? 1 : 0;
  if (!metrics.greater(heap[j], v)) return;
  do {
    metrics.move(heap[k], heap[j]);
    k = j;
    j = 2 * k;
    if (j > n) break;
    j += metrics.greater(heap[j + 1], heap[j]) ? 1 : 0;
  } while (metrics.greater(heap[j], v));
  metrics.move(heap[k], v);
}

template <class T>
void build_min_heap(const LargeHeapView<T>& heap, Metrics& metrics) {
  for (std::size_t i = heap.size() / 2; i > 0; --i) {
    sift_down_min(heap, i, metrics);
  }
}

template <class T>
void build_max_heap(const SmallHeapView<T>& heap, Metrics& metrics) {
  for (std::size_t i = heap.size() / 2; i > 0; --i) {
    sift_down_max(heap, i, metrics);
  }
}

template <class T>
bool check_heap_condition(const LargeHeapView<T>& heap) {
  for (std::size_t j = 2; j <= heap.size(); ++j) {
    if (heap[j] < heap[j / 2]) return false;
  }
  return true;
}

template <class T>
bool check_heap_condition(const SmallHeapView<T>& heap) {
  for (std::size_t k = 2; k <= heap.size(); ++k) {
    if (heap[k / 2] < heap[k]) return false;
  }
  return true;
}

struct Split {
  std::size_t small_size;
  std::size_t large_size;

  friend bool operator==(const Split&, const Split&) = default;
};

// The small heap always gets an odd node count, so every internal node of
// the small heap has two children.
inline Split split_indices(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw OutOfRange("selection index " + std::to_string(k) +
                     " outside 1.." + std::to_string(n));
  }
  const std::size_t shn = (k % 2 == 0) ? k - 1 : k;
  return {shn, n - shn};
}

// Work split for building a heap of n = 2^m - 1 nodes on p = 2^q workers:
// p disjoint subheaps of 2^(m-q) - 1 nodes each, plus 2^q - 1 sifts for the
// nodes above them.
struct ParallelPlan {
  unsigned m = 0;
  unsigned q = 0;
  std::size_t workers = 1;
  std::size_t subheap_size = 0;
  std::size_t residual_sifts = 0;

  static ParallelPlan make(std::size_t n, std::size_t workers) {
    if (n == 0 || !std::has_single_bit(n + 1)) {
      throw InvalidPlan("heap size " + std::to_string(n) +
                        " is not of the form 2^m - 1");
    }
    if (workers == 0 || !std::has_single_bit(workers)) {
      throw InvalidPlan("worker count " + std::to_string(workers) +
                        " is not a power of two");
    }
    ParallelPlan plan;
    plan.m = static_cast<unsigned>(std::countr_zero(n + 1));
    plan.q = static_cast<unsigned>(std::countr_zero(workers));
    if (plan.q > plan.m) {
      throw InvalidPlan("more worker levels (" + std::to_string(plan.q) +
                        ") than heap levels (" + std::to_string(plan.m) + ")");
    }
    plan.workers = workers;
    plan.subheap_size = (std::size_t{1} << (plan.m - plan.q)) - 1;
    plan.residual_sifts = workers - 1;
    return plan;
  }
};

// Floyd construction split across threads. Each worker first builds one of
// the p deepest disjoint subheaps; the nodes above them are then sifted one
// level at a time, deepest first, with a join between levels. Sifts on
// disjoint subtrees commute, so the result matches build_min_heap exactly.
// Per-worker counters are summed into `metrics` after each join.
template <class T>
void build_min_heap_parallel(const LargeHeapView<T>& heap, std::size_t workers,
                             Metrics& metrics) {
  const ParallelPlan plan = ParallelPlan::make(heap.size(), workers);
  if (plan.q == 0) {
    build_min_heap(heap, metrics);
    return;
  }

  std::vector<Metrics> local(plan.workers, Metrics(metrics.phase()));
  auto merge = [&] {
    for (Metrics& m : local) {
      metrics += m;
      m = Metrics(metrics.phase());
    }
  };

  {
    // Subtree rooted at r: relative depth d spans r*2^d .. r*2^d + 2^d - 1.
    const unsigned depth = plan.m - plan.q;
    std::vector<std::jthread> pool;
    pool.reserve(plan.workers);
    for (std::size_t w = 0; w < plan.workers; ++w) {
      pool.emplace_back([&heap, &local, depth, w, root = plan.workers + w] {
        for (unsigned d = depth; d-- > 1;) {
          const std::size_t first = root << (d - 1);
          for (std::size_t i = first + (std::size_t{1} << (d - 1)); i-- > first;) {
            sift_down_min(heap, i, local[w]);
          }
        }
      });
    }
  }
  merge();

  for (unsigned level = plan.q; level-- > 0;) {
    const std::size_t first = std::size_t{1} << level;
    const std::size_t count = first;
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (std::size_t w = 0; w < count; ++w) {
      pool.emplace_back([&heap, &local, node = first + w, w] {
        sift_down_min(heap, node, local[w]);
      });
    }
    pool.clear();
    merge();
  }
}

}  // namespace dualheap

#endif  // DUALHEAP_HEAP_HPP_
