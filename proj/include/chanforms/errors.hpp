// Copyright 2026 The chanforms Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chanforms {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  NotHermitian,
  NoConvergence,
  OutsideBall,
  WrongDimension,
  InvalidState,
  UnsupportedCombination,
  NotHermiticityPreserving,
  NotTracePreserving,
  NotCompletelyPositive,
  IncompleteKraus,
  NotUnitAxis,
  ProbabilityRange,
  RankRange,
  // Document parsing.
  SyntaxError,
  UnknownField,
  MissingField,
  BadMatrixShape,
  NonFiniteEntry,
};

inline constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::OutsideBall: return "OutsideBall";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorKind::NotHermiticityPreserving: return "NotHermiticityPreserving";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::NotCompletelyPositive: return "NotCompletelyPositive";
    case ErrorKind::IncompleteKraus: return "IncompleteKraus";
    case ErrorKind::NotUnitAxis: return "NotUnitAxis";
    case ErrorKind::ProbabilityRange: return "ProbabilityRange";
    case ErrorKind::RankRange: return "RankRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownField: return "UnknownField";
    case ErrorKind::MissingField: return "MissingField";
    case ErrorKind::BadMatrixShape: return "BadMatrixShape";
    case ErrorKind::NonFiniteEntry: return "NonFiniteEntry";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable error kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Errors that describe a map violating the A-form constraints, as opposed to
// malformed input or usage.
inline constexpr bool is_invalid_map(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermiticityPreserving:
    case ErrorKind::NotTracePreserving:
    case ErrorKind::IncompleteKraus:
    case ErrorKind::NotUnitAxis:
    case ErrorKind::ProbabilityRange:
    case ErrorKind::OutsideBall:
    case ErrorKind::RankRange:
      return true;
    default:
      return false;
  }
}

}  // namespace chanforms
