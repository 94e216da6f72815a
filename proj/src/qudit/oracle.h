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

#ifndef QUDIT_ORACLE_H
#define QUDIT_ORACLE_H

#include <array>
#include <cstdint>

namespace qudit {

/// Functions with f(0) == f(1) are the "unbalanced" (constant) ones.
enum class OracleKind { Unbalanced, Balanced };
enum class Verdict { Constant, Balanced };

/// One of the four one-bit boolean functions f_1..f_4:
///   f_1 = (0,0), f_2 = (1,1), f_3 = (0,1), f_4 = (1,0)  as (f(0), f(1)).
struct BooleanOracle {
    int id;
    std::array<uint8_t, 2> table;
    OracleKind kind;

    uint8_t operator()(unsigned x) const {
        return table[x & 1];
    }
};

inline constexpr int kOracleCount = 4;

/// Throws InvalidOracle unless 1 <= id <= 4.
BooleanOracle boolean_oracle(int id);

Verdict classify(const BooleanOracle &oracle);

const char *verdict_name(Verdict v);

}  // namespace qudit

#endif
