// Copyright 2026 The isub Authors
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

#ifndef ISUB_ERROR_H_
#define ISUB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace isub {

enum class ErrorKind {
  kParseError,
  kInvalidInput,
  kBudgetExhausted,
  kLiftConflict,
  kDisconnected,
  kHypothesisNotMet,
  kNotFound,
  kTrialsExhausted,
  kRoundsExhausted,
  kStructureViolation,
  kUnknownName,
  kAttemptsExhausted,
  kConstructionFailed,
  kEarlySuccess,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type. The message
// names the stage that failed; `kind` is what callers branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kBudgetExhausted: return "BudgetExhausted";
    case ErrorKind::kLiftConflict: return "LiftConflict";
    case ErrorKind::kDisconnected: return "Disconnected";
    case ErrorKind::kHypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::kNotFound: return "NotFound";
    case ErrorKind::kTrialsExhausted: return "TrialsExhausted";
    case ErrorKind::kRoundsExhausted: return "RoundsExhausted";
    case ErrorKind::kStructureViolation: return "StructureViolation";
    case ErrorKind::kUnknownName: return "UnknownName";
    case ErrorKind::kAttemptsExhausted: return "AttemptsExhausted";
    case ErrorKind::kConstructionFailed: return "ConstructionFailed";
    case ErrorKind::kEarlySuccess: return "EarlySuccess";
  }
  return "Unknown";
}

}  // namespace isub

#endif  // ISUB_ERROR_H_
