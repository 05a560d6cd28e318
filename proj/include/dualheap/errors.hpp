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

#ifndef DUALHEAP_ERRORS_HPP_
#define DUALHEAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dualheap {

// Numeric values match dh_status in dualheap.h.
enum class ErrorCode : int {
  invalid_argument = 1,
  empty_input = 2,
  out_of_range = 3,
  invalid_plan = 4,
  invariant_violation = 5,
  io = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::invalid_argument, what) {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what)
      : Error(ErrorCode::empty_input, what) {}
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& what)
      : Error(ErrorCode::out_of_range, what) {}
};

class InvalidPlan : public Error {
 public:
  explicit InvalidPlan(const std::string& what)
      : Error(ErrorCode::invalid_plan, what) {}
};

// Raised when an algorithm breaks one of its own invariants: a step budget
// overrun, or a result that disagrees with the oracle.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what)
      : Error(ErrorCode::invariant_violation, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

}  // namespace dualheap

#endif  // DUALHEAP_ERRORS_HPP_
