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

#include "dualheap/baselines.hpp"
#include "dualheap/bench.hpp"
#include "test_support.hpp"

namespace dualheap {
namespace {

using testing::Buffer;
using testing::guarded;

bool sides_ok(const Buffer& w, std::size_t lo, std::size_t hi, std::size_t j,
              std::int64_t pivot) {
  for (std::size_t i = lo; i <= j; ++i) {
    if (w[i] > pivot) return false;
  }
  for (std::size_t i = j + 1; i <= hi; ++i) {
    if (w[i] < pivot) return false;
  }
  return true;
}

TEST(HoarePartition, AllOrderingsOfThree) {
  Buffer perm{1, 2, 3};
  do {
    Buffer w = guarded(perm);
    Metrics m;
    const std::size_t j = hoare_partition<std::int64_t>(w, 1, 3, 2, m);
    EXPECT_GE(j, 1u);
    EXPECT_LE(j, 3u);
    EXPECT_TRUE(sides_ok(w, 1, 3, j, 2));
    EXPECT_TRUE(testing::same_multiset(w, guarded(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(HoarePartition, AllEqualSplitsInside) {
  Buffer w = guarded({4, 4, 4, 4});
  Metrics m;
  const std::size_t j = hoare_partition<std::int64_t>(w, 1, 4, 4, m);
  EXPECT_GE(j, 1u);
  EXPECT_LT(j, 4u);
  EXPECT_TRUE(sides_ok(w, 1, 4, j, 4));
}

TEST(HoarePartition, Singleton) {
  Buffer w = guarded({9});
  Metrics m;
  EXPECT_EQ(hoare_partition<std::int64_t>(w, 1, 1, 9, m), 1u);
}

TEST(HoarePartition, FirstElementPivotAlwaysProgresses) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    Buffer payload(n);
    for (auto& v : payload) v = static_cast<std::int64_t>(rng() % 6);
    Buffer w = guarded(payload);
    Metrics m;
    const std::int64_t pivot = w[1];
    const std::size_t j = hoare_partition<std::int64_t>(w, 1, n, pivot, m);
    ASSERT_LT(j, n);
    ASSERT_TRUE(sides_ok(w, 1, n, j, pivot));
  }
}

TEST(Quickselect, Examples) {
  Buffer w = guarded({5, 3, 9, 1, 7});
  Metrics m;
  EXPECT_EQ(quickselect<std::int64_t>(w, 3, {PivotKind::first}, m), 5);
  Buffer two = guarded({2, 1});
  EXPECT_EQ(quickselect<std::int64_t>(two, 1, {PivotKind::first}, m), 1);
  Buffer sorted = guarded(generate({300, Distribution::sorted, 0}));
  EXPECT_EQ(quickselect<std::int64_t>(sorted, 150, {PivotKind::first}, m), 150);
  EXPECT_THROW(quickselect<std::int64_t>(w, 0, {PivotKind::first}, m), OutOfRange);
  EXPECT_THROW(quickselect<std::int64_t>(w, 6, {PivotKind::first}, m), OutOfRange);
}

TEST(Quickselect, RandomPivotIsSeedDeterministic) {
  const Buffer input = generate({1000, Distribution::random, 4});
  Metrics a, b;
  Buffer wa = guarded(input), wb = guarded(input);
  EXPECT_EQ(quickselect<std::int64_t>(wa, 321, {PivotKind::random, 77}, a), 321);
  EXPECT_EQ(quickselect<std::int64_t>(wb, 321, {PivotKind::random, 77}, b), 321);
  EXPECT_EQ(a, b);
  EXPECT_EQ(wa, wb);
}

// Element that flags any comparison against a guard slot lying outside the
// window handed to quickselect.
struct Tracked {
  std::int64_t value = 0;
  bool outside = false;
  static inline int outside_reads = 0;

  friend bool operator<(const Tracked& a, const Tracked& b) {
    if (a.outside || b.outside) ++outside_reads;
    return a.value < b.value;
  }
};

TEST(Quickselect, StaysInsideSegmentAndSentinels) {
  std::mt19937_64 rng(12);
  for (PivotKind kind : {PivotKind::first, PivotKind::random}) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 50;
      std::vector<Tracked> buf(n + 4);
      buf.front() = Tracked{-1000, true};
      buf.back() = Tracked{1000, true};
      buf[1] = Tracked{-1, false};       // window's low sentinel
      buf[n + 2] = Tracked{100, false};  // window's high sentinel
      for (std::size_t i = 2; i <= n + 1; ++i) {
        buf[i].value = static_cast<std::int64_t>(rng() % 100);
      }
      const auto before_front = buf.front().value, before_back = buf.back().value;
      Tracked::outside_reads = 0;
      Metrics m;
      const std::size_t k = 1 + rng() % n;
      std::span<Tracked> window(buf.data() + 1, n + 2);
      quickselect(window, k, PivotRule{kind, 5}, m);
      EXPECT_EQ(Tracked::outside_reads, 0);
      EXPECT_EQ(buf.front().value, before_front);
      EXPECT_EQ(buf.back().value, before_back);
    }
  }
}

TEST(MedianOfMedians, Examples) {
  Metrics m;
  Buffer w = guarded(generate({25, Distribution::sorted, 0}));
  EXPECT_EQ(median_of_medians<std::int64_t>(w, 1, 25, m), 13);
  Buffer one = guarded({42});
  EXPECT_EQ(median_of_medians<std::int64_t>(one, 1, 1, m), 42);
}

TEST(MedianOfMedians, RankBounds) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 50 + rng() % 3000;
    const Buffer input = generate({n, Distribution::random, rng()});
    Buffer w = guarded(input);
    Metrics m;
    const std::int64_t pivot = median_of_medians<std::int64_t>(w, 1, n, m);
    // Values are 1..n, so the value is its own rank.
    ASSERT_GE(static_cast<double>(pivot), 0.2 * static_cast<double>(n)) << n;
    ASSERT_LE(static_cast<double>(pivot), 0.8 * static_cast<double>(n)) << n;
    ASSERT_TRUE(testing::same_multiset(w, guarded(input)));
  }
}

TEST(QuickselectMom, Examples) {
  Metrics m;
  Buffer w = guarded({5, 3, 9, 1, 7});
  EXPECT_EQ(quickselect_mom<std::int64_t>(w, 3, m), 5);
  Buffer same = guarded({8, 8, 8, 8, 8, 8});
  EXPECT_EQ(quickselect_mom<std::int64_t>(same, 4, m), 8);
  Buffer sorted = guarded(generate({5000, Distribution::sorted, 0}));
  EXPECT_EQ(quickselect_mom<std::int64_t>(sorted, 2500, m), 2500);
}

TEST(OracleSelect, Examples) {
  EXPECT_EQ(oracle_select<std::int64_t>(Buffer{3, 1, 2}, 2), 2);
  EXPECT_EQ(oracle_select<std::int64_t>(Buffer{7}, 1), 7);
  EXPECT_EQ(oracle_select<std::int64_t>(Buffer{2, 2, 1}, 2), 2);
  EXPECT_THROW(oracle_select<std::int64_t>(Buffer{1}, 2), OutOfRange);
}

TEST(Baselines, AgreeWithOracleExhaustively) {
  for (std::size_t n = 1; n <= 8; ++n) {
    Buffer perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (std::size_t k = 1; k <= n; ++k) {
        Metrics m;
        Buffer a = guarded(perm), b = guarded(perm), c = guarded(perm);
        const auto expect = static_cast<std::int64_t>(k);
        ASSERT_EQ(quickselect<std::int64_t>(a, k, {PivotKind::first}, m), expect);
        ASSERT_EQ(quickselect<std::int64_t>(b, k, {PivotKind::random, k}, m), expect);
        ASSERT_EQ(quickselect_mom<std::int64_t>(c, k, m), expect);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(Baselines, AgreeWithOracleOnRandomDuplicates) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 120;
    Buffer input(n);
    const std::uint64_t alphabet = 1 + rng() % 10;
    for (auto& v : input) v = static_cast<std::int64_t>(rng() % alphabet);
    const std::size_t k = 1 + rng() % n;
    const std::int64_t expect = oracle_select<std::int64_t>(input, k);
    Metrics m;
    Buffer a = guarded(input), b = guarded(input), c = guarded(input);
    ASSERT_EQ(quickselect<std::int64_t>(a, k, {PivotKind::first}, m), expect);
    ASSERT_EQ(quickselect<std::int64_t>(b, k, {PivotKind::random, rng()}, m), expect);
    ASSERT_EQ(quickselect_mom<std::int64_t>(c, k, m), expect);
  }
}

TEST(PivotNames, RoundTrip) {
  for (PivotKind p : {PivotKind::first, PivotKind::random, PivotKind::median_of_medians}) {
    EXPECT_EQ(parse_pivot_kind(to_string(p)), p);
  }
}

}  // namespace
}  // namespace dualheap
