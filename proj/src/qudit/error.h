// Copyright 2026 The qudit5 Authors
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

#ifndef QUDIT_ERROR_H
#define QUDIT_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qudit {

enum class ErrorKind {
    AncillaLevel,
    OutOfRange,
    AncillaPopulated,
    DimensionMismatch,
    NotUnitary,
    NotUnitPhase,
    NotDensityMatrix,
    InvalidLevels,
    NoAncillaAvailable,
    FixedLevelClash,
    InvalidOracle,
    NotNormalized,
    AmbiguousReadout,
    EmptySpace,
    SyntaxError,
    UnknownGate,
    BadLevelIndex,
    BadFormat,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and tests)
/// can branch on the failure class without parsing messages.
class QuditError : public std::runtime_error {
   public:
    QuditError(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Parse failures additionally report a 1-based line and column.
class ParseError : public QuditError {
   public:
    ParseError(ErrorKind kind, size_t line, size_t column, const std::string &message);

    size_t line() const noexcept {
        return line_;
    }
    size_t column() const noexcept {
        return column_;
    }

   private:
    size_t line_;
    size_t column_;
};

}  // namespace qudit

#endif
