// Copyright 2026 The Antimagic Orientation Authors.
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

#ifndef ANTIMAGIC_ERRORS_H_
#define ANTIMAGIC_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace antimagic {

enum class ErrorCode {
  kMalformedGraph,
  kParseError,
  kNotBiregular,
  kEmptyGraph,
  kInfeasible,
  kEvenComponent,
  kWrongCase,
  kOddDegree,
  kOddLength,
  kNotTwoRegular,
  kWindowMismatch,
  kBadWindow,
  kRepeatedYVertex,
  kOddHalfLength,
  kLengthClassViolation,
  kYOverlap,
  kConstructionFailed,
  kTooLarge,
  kRetriesExhausted,
  kInvalidWalk,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace antimagic

#endif  // ANTIMAGIC_ERRORS_H_
