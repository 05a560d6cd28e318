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

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "dualheap/bench.hpp"

namespace dualheap {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <class Int>
Int parse_int(std::string_view field, std::size_t line_no) {
  Int value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw InvalidArgument("line " + std::to_string(line_no) +
                          ": bad integer field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void emit_csv(std::span<const ExperimentRecord> records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const ExperimentRecord& r : records) {
    out << r.algo << ',' << r.swap_strategy << ',' << r.presplit << ','
        << r.n << ',' << r.k << ',' << r.dist << ',' << r.seed << ','
        << r.trial << ',' << r.compares_construct << ',' << r.moves_construct
        << ',' << r.compares_swap << ',' << r.moves_swap << ','
        << r.compares_total << ',' << r.moves_total << ',' << r.elapsed_ns
        << ',' << (r.correct ? "true" : "false") << '\n';
  }
  if (!out) throw IoError("failed writing CSV output");
}

void emit_csv(std::span<const ExperimentRecord> records,
              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  emit_csv(records, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::vector<ExperimentRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw InvalidArgument("missing or unexpected benchmark CSV header");
  }
  std::vector<ExperimentRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 16) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": expected 16 fields, got " +
                            std::to_string(f.size()));
    }
    ExperimentRecord r;
    r.algo = std::string(f[0]);
    r.swap_strategy = std::string(f[1]);
    r.presplit = parse_int<int>(f[2], line_no);
    r.n = parse_int<std::size_t>(f[3], line_no);
    r.k = parse_int<std::size_t>(f[4], line_no);
    r.dist = std::string(f[5]);
    r.seed = parse_int<std::uint64_t>(f[6], line_no);
    r.trial = parse_int<std::size_t>(f[7], line_no);
    r.compares_construct = parse_int<std::uint64_t>(f[8], line_no);
    r.moves_construct = parse_int<std::uint64_t>(f[9], line_no);
    r.compares_swap = parse_int<std::uint64_t>(f[10], line_no);
    r.moves_swap = parse_int<std::uint64_t>(f[11], line_no);
    r.compares_total = parse_int<std::uint64_t>(f[12], line_no);
    r.moves_total = parse_int<std::uint64_t>(f[13], line_no);
    r.elapsed_ns = parse_int<std::uint64_t>(f[14], line_no);
    if (f[15] != "true" && f[15] != "false") {
      throw InvalidArgument("line " + std::to_string(line_no) +
                            ": correct must be true or false");
    }
    r.correct = f[15] == "true";
    records.push_back(std::move(r));
  }
  return records;
}

void emit_worstcase_csv(std::span<const WorstCaseReport> reports,
                        std::ostream& out) {
  out << kWorstCaseHeader << '\n';
  for (const WorstCaseReport& r : reports) {
    out << r.n << ',' << r.instances_tested << ',' << r.max_compares_swap
        << ',' << r.argmax_k << ',';
    for (std::size_t i = 0; i < r.argmax_permutation.size(); ++i) {
      if (i) out << ' ';
      out << r.argmax_permutation[i];
    }
    out << '\n';
  }
  if (!out) throw IoError("failed writing CSV output");
}

}  // namespace dualheap
