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

#include "qudit/error.h"

namespace qudit {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::AncillaLevel:
            return "AncillaLevel";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::AncillaPopulated:
            return "AncillaPopulated";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::NotUnitPhase:
            return "NotUnitPhase";
        case ErrorKind::NotDensityMatrix:
            return "NotDensityMatrix";
        case ErrorKind::InvalidLevels:
            return "InvalidLevels";
        case ErrorKind::NoAncillaAvailable:
            return "NoAncillaAvailable";
        case ErrorKind::FixedLevelClash:
            return "FixedLevelClash";
        case ErrorKind::InvalidOracle:
            return "InvalidOracle";
        case ErrorKind::NotNormalized:
            return "NotNormalized";
        case ErrorKind::AmbiguousReadout:
            return "AmbiguousReadout";
        case ErrorKind::EmptySpace:
            return "EmptySpace";
        case ErrorKind::SyntaxError:
            return "SyntaxError";
        case ErrorKind::UnknownGate:
            return "UnknownGate";
        case ErrorKind::BadLevelIndex:
            return "BadLevelIndex";
        case ErrorKind::BadFormat:
            return "BadFormat";
    }
    return "Unknown";
}

QuditError::QuditError(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

ParseError::ParseError(ErrorKind kind, size_t line, size_t column, const std::string &message)
    : QuditError(kind, "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

}  // namespace qudit
