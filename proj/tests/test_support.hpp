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

#ifndef DUALHEAP_TESTS_TEST_SUPPORT_HPP_
#define DUALHEAP_TESTS_TEST_SUPPORT_HPP_

// Test-only oracles. These deliberately avoid the library's view types and
// address the raw buffer by position arithmetic.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dualheap::testing {

using Buffer = std::vector<std::int64_t>;

// payload -> [min, payload..., max]
inline Buffer guarded(const std::vector<std::int64_t>& payload) {
  Buffer b;
  b.push_back(*std::min_element(payload.begin(), payload.end()));
  b.insert(b.end(), payload.begin(), payload.end());
  b.push_back(*std::max_element(payload.begin(), payload.end()));
  return b;
}

inline std::vector<std::int64_t> sorted_copy(std::span<const std::int64_t> v) {
  std::vector<std::int64_t> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool same_multiset(std::span<const std::int64_t> a,
                          std::span<const std::int64_t> b) {
  return sorted_copy(a) == sorted_copy(b);
}

// Min-heap of `size` nodes whose node j sits at buf[base + j].
inline bool min_heap_at(std::span<const std::int64_t> buf, std::size_t base,
                        std::size_t size) {
  for (std::size_t child = 2; child <= size; ++child) {
    if (buf[base + child] < buf[base + child / 2]) return false;
  }
  return true;
}

// Max-heap of `size` nodes whose node k sits at buf[base - k].
inline bool max_heap_at(std::span<const std::int64_t> buf, std::size_t base,
                        std::size_t size) {
  for (std::size_t child = 2; child <= size; ++child) {
    if (buf[base - child / 2] < buf[base - child]) return false;
  }
  return true;
}

inline std::int64_t kth_smallest(std::vector<std::int64_t> v, std::size_t k) {
  std::sort(v.begin(), v.end());
  return v[k - 1];
}

// Calls f(values) for every sequence of `length` symbols in [0, base).
template <class F>
void for_each_word(std::size_t length, std::int64_t base, F&& f) {
  std::vector<std::int64_t> word(length, 0);
  for (;;) {
    f(word);
    std::size_t i = 0;
    while (i < length && ++word[i] == base) word[i++] = 0;
    if (i == length) return;
  }
}

}  // namespace dualheap::testing

#endif  // DUALHEAP_TESTS_TEST_SUPPORT_HPP_
