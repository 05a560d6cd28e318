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

#ifndef DUALHEAP_METRICS_HPP_
#define DUALHEAP_METRICS_HPP_

#include <compare>
#include <cstdint>
#include <utility>

namespace dualheap {

enum class Phase : std::uint8_t { construct, swap, other };

// Comparison and move counters, bucketed by the phase that was active when
// the operation happened.
//
// A comparison is one element-vs-element test, sentinel reads included. A
// move is one write of an element into a buffer slot; an exchange is two
// moves. Reads into temporaries are free.
class Metrics {
 public:
  std::uint64_t compares_construct = 0;
  std::uint64_t moves_construct = 0;
  std::uint64_t compares_swap = 0;
  std::uint64_t moves_swap = 0;
  std::uint64_t compares_other = 0;
  std::uint64_t moves_other = 0;

  Metrics() = default;
  explicit Metrics(Phase phase) : phase_(phase) {}

  Phase phase() const noexcept { return phase_; }
  void set_phase(Phase phase) noexcept { phase_ = phase; }

  template <class T>
  std::weak_ordering compare(const T& a, const T& b) {
    ++compares();
    if (a < b) return std::weak_ordering::less;
    if (b < a) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

  template <class T>
  bool less(const T& a, const T& b) {
    ++compares();
    return a < b;
  }

  template <class T>
  bool greater(const T& a, const T& b) {
    ++compares();
    return b < a;
  }

  template <class T>
  void move(T& slot, const T& value) {
    slot = value;
    ++moves();
  }

  template <class T>
  void exchange(T& a, T& b) {
    using std::swap;
    swap(a, b);
    moves() += 2;
  }

  std::uint64_t compares_total() const noexcept {
    return compares_construct + compares_swap + compares_other;
  }
  std::uint64_t moves_total() const noexcept {
    return moves_construct + moves_swap + moves_other;
  }

  // Sums counters; the active phase of *this is kept.
  Metrics& operator+=(const Metrics& other) noexcept {
    compares_construct += other.compares_construct;
    moves_construct += other.moves_construct;
    compares_swap += other.compares_swap;
    moves_swap += other.moves_swap;
    compares_other += other.compares_other;
    moves_other += other.moves_other;
    return *this;
  }

  friend bool operator==(const Metrics& a, const Metrics& b) noexcept {
    return a.compares_construct == b.compares_construct &&
           a.moves_construct == b.moves_construct &&
           a.compares_swap == b.compares_swap &&
           a.moves_swap == b.moves_swap &&
           a.compares_other == b.compares_other &&
           a.moves_other == b.moves_other;
  }

 private:
  std::uint64_t& compares() noexcept {
    switch (phase_) {
      case Phase::construct: return compares_construct;
      case Phase::swap: return compares_swap;
      default: return compares_other;
    }
  }
  std::uint64_t& moves() noexcept {
    switch (phase_) {
      case Phase::construct: return moves_construct;
      case Phase::swap: return moves_swap;
      default: return moves_other;
    }
  }

  Phase phase_ = Phase::other;
};

// Switches the active phase for the lifetime of the guard.
class PhaseScope {
 public:
  PhaseScope(Metrics& metrics, Phase phase)
      : metrics_(metrics), saved_(metrics.phase()) {
    metrics_.set_phase(phase);
  }
  ~PhaseScope() { metrics_.set_phase(saved_); }
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  Metrics& metrics_;
  Phase saved_;
};

}  // namespace dualheap

#endif  // DUALHEAP_METRICS_HPP_
