// Copyright 2026 The Scripbid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCRIPBID_ERROR_H_
#define SCRIPBID_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace scripbid {

enum class ErrorCode {
  kCycleDetected,
  kDanglingChild,
  kEmptyMoveSet,
  kMissingUtility,
  kNotATerminal,
  kNonDyadic,
  kBudgetOutOfRange,
  kTooManyItems,
  kNegativeValue,
  kMissingTableEntry,
  kLengthMismatch,
  kEmptyFrontier,
  kInvalidSpec,
  kUnknownFixture,
  kGridTooLarge,
  kNonConvergence,
  kOffGrid,
  kInfeasibleBid,
  kWrongLength,
  kNotBinary,
  kChildProfileMissing,
  kCyclic,
  kUnlabeledTerminal,
  kNotFullBinary,
  kIncompleteTables,
  kParse,
  kEnumerationTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every library failure is reported as a GameError carrying a code that
// tests and the CLI can dispatch on.
class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scripbid

#endif  // SCRIPBID_ERROR_H_
