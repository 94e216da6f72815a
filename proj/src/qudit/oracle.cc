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

#include "qudit/oracle.h"

#include <string>

#include "qudit/error.h"

namespace qudit {

BooleanOracle boolean_oracle(int id) {
    static constexpr std::array<std::array<uint8_t, 2>, 4> kTables = {{{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
    if (id < 1 || id > kOracleCount) {
        throw QuditError(ErrorKind::InvalidOracle, "oracle id must be in 1..4, got " + std::to_string(id));
    }
    auto table = kTables[static_cast<size_t>(id - 1)];
    return {id, table, table[0] == table[1] ? OracleKind::Unbalanced : OracleKind::Balanced};
}

Verdict classify(const BooleanOracle &oracle) {
    return (oracle.table[0] ^ oracle.table[1]) ? Verdict::Balanced : Verdict::Constant;
}

const char *verdict_name(Verdict v) {
    return v == Verdict::Constant ? "Constant" : "Balanced";
}

}  // namespace qudit
