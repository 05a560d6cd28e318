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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dualheap/selector.hpp"
#include "dualheap/swap.hpp"
#include "test_support.hpp"

namespace dualheap {
namespace {

using testing::Buffer;

// Builds a dualheap over `payload` (already satisfying both heap conditions
// is the caller's business) with the given small-heap size.
struct Fixture {
  Buffer buf;
  DualHeap<std::int64_t> dh;

  Fixture(const Buffer& payload, std::size_t shn)
      : buf(testing::guarded(payload)),
        dh(DualHeap<std::int64_t>::over(buf, shn)) {}

  Buffer payload() const { return Buffer(buf.begin() + 1, buf.end() - 1); }
};

std::size_t cross_inversions(const Buffer& buf, std::size_t shn, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 1; i <= shn; ++i) {
    for (std::size_t j = shn + 1; j <= n; ++j) count += buf[i] > buf[j] ? 1 : 0;
  }
  return count;
}

TEST(TreeSwap, ExchangesRootsAndResifts) {
  // small = [3], large = [1, 2]
  Fixture f({3, 1, 2}, 1);
  Metrics m;
  tree_swap(f.dh, 1, 1, m);
  EXPECT_EQ(f.payload(), (Buffer{1, 2, 3}));
  EXPECT_TRUE(check_heap_condition(f.dh.large));
  EXPECT_EQ(f.dh.large[1], 2);
}

TEST(BranchSwap, MatchesTreeSwapOnDepthOneInstance) {
  Fixture f({3, 1, 2}, 1);
  Metrics m;
  branch_swap(f.dh, m);
  EXPECT_EQ(f.payload(), (Buffer{1, 2, 3}));
}

TEST(RootSwap, ExchangesRootsAndResifts) {
  Fixture f({3, 1, 2}, 1);
  Metrics m;
  root_swap(f.dh, m);
  EXPECT_EQ(f.payload(), (Buffer{1, 2, 3}));
  EXPECT_EQ(m.moves_total(), 4u);  // exchange (2) + one sift level + final write
}

TEST(SwapStrategies, SingletonHeapsExchangeOnce) {
  for (SwapStrategy s : {SwapStrategy::tree, SwapStrategy::branch, SwapStrategy::root}) {
    Fixture f({5, 2}, 1);
    Metrics m;
    const std::size_t steps = run_swapping_phase(f.dh, s, m);
    EXPECT_EQ(steps, 1u);
    EXPECT_EQ(f.payload(), (Buffer{2, 5}));
    EXPECT_EQ(m.moves_swap, 2u);
  }
}

TEST(RunSwappingPhase, GuardFalseCostsOneComparison) {
  for (SwapStrategy s : {SwapStrategy::tree, SwapStrategy::branch, SwapStrategy::root}) {
    Fixture sorted({1, 2, 3}, 1);
    Metrics m;
    EXPECT_EQ(run_swapping_phase(sorted.dh, s, m), 0u);
    EXPECT_EQ(m.compares_swap, 1u);
    EXPECT_EQ(m.moves_total(), 0u);

    Fixture equal({4, 4, 4, 4}, 3);
    Metrics me;
    EXPECT_EQ(run_swapping_phase(equal.dh, s, me), 0u);
    EXPECT_EQ(me.compares_swap, 1u);
  }
}

TEST(RunSwappingPhase, ReverseSortedFive) {
  SentinelArray<std::int64_t> arr =
      SentinelArray<std::int64_t>::prepare(Buffer{5, 4, 3, 2, 1});
  Metrics m;
  dh_select(arr, 3, SelectOptions{SwapStrategy::tree, 1, 1}, m);
  Buffer left(arr.payload().begin(), arr.payload().begin() + 3);
  std::sort(left.begin(), left.end());
  EXPECT_EQ(left, (Buffer{1, 2, 3}));
}

TEST(RunSwappingPhase, StepBudget) {
  EXPECT_EQ(swap_step_budget(1), 2u);
  EXPECT_EQ(swap_step_budget(7), 7u * 4);
  EXPECT_EQ(swap_step_budget(8), 8u * 5);
}

// Each outer iteration removes at least one cross inversion, and both heap
// conditions survive every iteration.
TEST(SwapProperties, ProgressAndHeapConditions) {
  std::mt19937_64 rng(3);
  for (SwapStrategy s : {SwapStrategy::tree, SwapStrategy::branch, SwapStrategy::root}) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + rng() % 40;
      const std::size_t k = 1 + rng() % n;
      Buffer payload(n);
      for (auto& v : payload) v = static_cast<std::int64_t>(rng() % 12);
      Buffer buf = testing::guarded(payload);
      const Split split = split_indices(n, k);
      auto dh = DualHeap<std::int64_t>::over(buf, split.small_size);
      Metrics m;
      build_max_heap(dh.small, m);
      build_min_heap(dh.large, m);
      std::size_t before = cross_inversions(buf, split.small_size, n);
      while (m.greater(dh.small[1], dh.large[1])) {
        switch (s) {
          case SwapStrategy::tree: tree_swap(dh, 1, 1, m); break;
          case SwapStrategy::branch: branch_swap(dh, m); break;
          case SwapStrategy::root: root_swap(dh, m); break;
        }
        ASSERT_TRUE(testing::max_heap_at(buf, split.small_size + 1, split.small_size));
        ASSERT_TRUE(testing::min_heap_at(buf, split.small_size, split.large_size));
        const std::size_t after = cross_inversions(buf, split.small_size, n);
        ASSERT_LT(after, before);
        before = after;
      }
      EXPECT_EQ(before, 0u);
    }
  }
}

// All strategies end with identical side multisets on distinct values.
TEST(SwapProperties, StrategiesAgreeOnSides) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 100;
    const std::size_t k = 1 + rng() % n;
    Buffer payload(n);
    std::iota(payload.begin(), payload.end(), 1);
    std::shuffle(payload.begin(), payload.end(), rng);
    std::vector<Buffer> sides;
    for (SwapStrategy s : {SwapStrategy::tree, SwapStrategy::branch, SwapStrategy::root}) {
      auto arr = SentinelArray<std::int64_t>::prepare(payload);
      Metrics m;
      const auto out = dh_select(arr, k, SelectOptions{s, 1, 1}, m);
      Buffer small(arr.payload().begin(), arr.payload().begin() + out.split);
      std::sort(small.begin(), small.end());
      sides.push_back(small);
      EXPECT_EQ(cross_inversions(Buffer(arr.window().begin(), arr.window().end()),
                                 out.split, n),
                0u);
    }
    EXPECT_EQ(sides[0], sides[1]);
    EXPECT_EQ(sides[0], sides[2]);
  }
}

TEST(SwapProperties, CountersPositiveWhenExchanging) {
  Fixture f({9, 8, 7, 1, 2, 3, 4}, 3);
  Metrics m;
  build_max_heap(f.dh.small, m);
  build_min_heap(f.dh.large, m);
  Metrics swap_only;
  const std::size_t steps = run_swapping_phase(f.dh, SwapStrategy::tree, swap_only);
  EXPECT_GT(steps, 0u);
  EXPECT_GT(swap_only.compares_swap, 0u);
  EXPECT_GT(swap_only.moves_swap, 0u);
}

TEST(SwapStrategyNames, RoundTrip) {
  for (SwapStrategy s : {SwapStrategy::tree, SwapStrategy::branch, SwapStrategy::root}) {
    EXPECT_EQ(parse_swap_strategy(to_string(s)), s);
  }
  EXPECT_FALSE(parse_swap_strategy("leaf").has_value());
}

}  // namespace
}  // namespace dualheap
