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

#include <cmath>
#include <map>
#include <set>

#include "dualheap/bench.hpp"

namespace dualheap {

namespace {

std::uint64_t metric_of(const ExperimentRecord& r, std::string_view metric) {
  if (metric == "compares_construct") return r.compares_construct;
  if (metric == "moves_construct") return r.moves_construct;
  if (metric == "compares_swap") return r.compares_swap;
  if (metric == "moves_swap") return r.moves_swap;
  if (metric == "compares_total") return r.compares_total;
  if (metric == "moves_total") return r.moves_total;
  if (metric == "elapsed_ns") return r.elapsed_ns;
  throw InvalidArgument("unknown metric '" + std::string(metric) + "'");
}

}  // namespace

double fit_growth(std::span<const GrowthPoint> points) {
  std::set<double> sizes;
  for (const GrowthPoint& p : points) {
    if (!(p.n > 0) || !(p.value > 0)) {
      throw InvalidArgument("growth fit needs positive sizes and values");
    }
    sizes.insert(p.n);
  }
  if (sizes.size() < 3) {
    throw InvalidArgument("growth fit needs at least 3 distinct sizes, got " +
                          std::to_string(sizes.size()));
  }
  double mx = 0, my = 0;
  for (const GrowthPoint& p : points) {
    mx += std::log(p.n);
    my += std::log(p.value);
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxy = 0, sxx = 0;
  for (const GrowthPoint& p : points) {
    const double dx = std::log(p.n) - mx;
    sxy += dx * (std::log(p.value) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::vector<GrowthPoint> mean_by_size(std::span<const ExperimentRecord> records,
                                      std::string_view metric) {
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (const ExperimentRecord& r : records) {
    auto& [sum, count] = acc[r.n];
    sum += static_cast<double>(metric_of(r, metric));
    ++count;
  }
  std::vector<GrowthPoint> points;
  for (const auto& [n, sc] : acc) {
    points.push_back({static_cast<double>(n), sc.first / static_cast<double>(sc.second)});
  }
  return points;
}

double fit_growth(std::span<const ExperimentRecord> records,
                  std::string_view metric) {
  return fit_growth(mean_by_size(records, metric));
}

double fit_growth(std::span<const WorstCaseReport> reports) {
  std::map<std::size_t, std::uint64_t> maxima;
  for (const WorstCaseReport& r : reports) {
    auto& m = maxima[r.n];
    m = std::max(m, r.max_compares_swap);
  }
  std::vector<GrowthPoint> points;
  for (const auto& [n, m] : maxima) {
    points.push_back({static_cast<double>(n), static_cast<double>(m)});
  }
  return fit_growth(points);
}

}  // namespace dualheap
