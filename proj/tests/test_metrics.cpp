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

#include "dualheap/metrics.hpp"

namespace dualheap {
namespace {

TEST(Metrics, FreshContextIsZero) {
  const Metrics m;
  EXPECT_EQ(m.compares_total(), 0u);
  EXPECT_EQ(m.moves_total(), 0u);
  EXPECT_EQ(m.phase(), Phase::other);
}

TEST(Metrics, CompareCountsOncePerCall) {
  Metrics m;
  EXPECT_EQ(m.compare(1, 2), std::weak_ordering::less);
  EXPECT_EQ(m.compares_total(), 1u);
  EXPECT_EQ(m.compare(2, 2), std::weak_ordering::equivalent);
  EXPECT_EQ(m.compares_total(), 2u);
  for (int i = 0; i < 5; ++i) m.less(i, 3);
  EXPECT_EQ(m.compares_total(), 7u);
  EXPECT_TRUE(m.greater(3, 1));
  EXPECT_EQ(m.compares_total(), 8u);
}

TEST(Metrics, MovesAndExchanges) {
  Metrics m;
  int slot = 0;
  m.move(slot, 4);
  EXPECT_EQ(slot, 4);
  EXPECT_EQ(m.moves_total(), 1u);
  int a = 1, b = 2;
  m.exchange(a, b);
  EXPECT_EQ(a, 2);
  EXPECT_EQ(b, 1);
  EXPECT_EQ(m.moves_total(), 3u);
}

TEST(Metrics, PhasesBucketSeparately) {
  Metrics m;
  m.set_phase(Phase::construct);
  m.less(1, 2);
  m.less(1, 2);
  {
    PhaseScope scope(m, Phase::swap);
    m.less(1, 2);
    int x = 0;
    m.move(x, 1);
  }
  EXPECT_EQ(m.phase(), Phase::construct);
  EXPECT_EQ(m.compares_construct, 2u);
  EXPECT_EQ(m.compares_swap, 1u);
  EXPECT_EQ(m.moves_swap, 1u);
  EXPECT_EQ(m.compares_total(),
            m.compares_construct + m.compares_swap + m.compares_other);
}

TEST(Metrics, MergeSumsEveryBucket) {
  Metrics a(Phase::construct), b(Phase::swap);
  a.less(1, 2);
  b.less(1, 2);
  b.less(1, 2);
  int x = 0;
  b.move(x, 3);
  a += b;
  EXPECT_EQ(a.compares_construct, 1u);
  EXPECT_EQ(a.compares_swap, 2u);
  EXPECT_EQ(a.moves_swap, 1u);
  EXPECT_EQ(a.phase(), Phase::construct);
}

}  // namespace
}  // namespace dualheap
