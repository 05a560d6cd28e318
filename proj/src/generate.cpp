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
#include <string>
#include <utility>

#include "dualheap/bench.hpp"
#include "dualheap/random.hpp"

namespace dualheap {

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::random: return "random";
    case Distribution::sorted: return "sorted";
    case Distribution::reverse: return "reverse";
    case Distribution::organpipe: return "organpipe";
    case Distribution::allequal: return "allequal";
    case Distribution::fewvalues: return "fewvalues";
  }
  return "?";
}

std::optional<Distribution> parse_distribution(std::string_view s) {
  for (Distribution d :
       {Distribution::random, Distribution::sorted, Distribution::reverse,
        Distribution::organpipe, Distribution::allequal,
        Distribution::fewvalues}) {
    if (to_string(d) == s) return d;
  }
  return std::nullopt;
}

std::vector<Element> generate(const InputSpec& spec) {
  if (spec.n == 0) throw InvalidArgument("input size must be at least 1");
  const std::size_t n = spec.n;
  std::vector<Element> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (spec.dist) {
      case Distribution::random:
      case Distribution::sorted:
        out[i] = static_cast<Element>(i + 1);
        break;
      case Distribution::reverse:
        out[i] = static_cast<Element>(n - i);
        break;
      case Distribution::organpipe:
        out[i] = static_cast<Element>(std::min(i + 1, n - i));
        break;
      case Distribution::allequal:
        out[i] = 1;
        break;
      case Distribution::fewvalues:
        out[i] = static_cast<Element>(i % 4 + 1);
        break;
    }
  }
  if (spec.dist == Distribution::random) {
    SplitMix64 rng(spec.seed);
    for (std::size_t i = n - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(rng.below(i + 1));
      std::swap(out[i], out[j]);
    }
  }
  return out;
}

}  // namespace dualheap
