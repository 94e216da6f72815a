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

#ifndef QUDIT_CIRCUIT_H
#define QUDIT_CIRCUIT_H

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qudit/pulse.h"

namespace qudit {

/// Circuit text format, one statement per line:
///
///     # comment
///     RY 0 1 1.0      raw pulse on levels 0,1 with theta = 1.0 * pi
///     H_AB            named gate from the catalog
///     ORACLE_3
///
/// Named gates: H_A H_B H_AB T_A T_B CNOT_AB CNOT_BA ORACLE_1..ORACLE_4.
struct NamedGate {
    std::string name;
    bool operator==(const NamedGate &other) const = default;
};

struct RawPulse {
    Pulse pulse;
    bool operator==(const RawPulse &other) const = default;
};

using Statement = std::variant<NamedGate, RawPulse>;

struct CircuitProgram {
    std::vector<Statement> statements;

    bool operator==(const CircuitProgram &other) const = default;
};

const std::vector<std::string> &named_gate_keywords();

/// Throws ParseError (SyntaxError, UnknownGate, BadLevelIndex) at the first problem.
CircuitProgram parse_circuit(std::string_view text);

/// Canonical text form; parse_circuit(print_circuit(p)) == p.
std::string print_circuit(const CircuitProgram &program);

/// Concatenates gate bodies and raw pulses, canonicalizes angles into [0, 4 pi),
/// and optionally lowers Y pulses to X-only form.
PulseSequence compile(const CircuitProgram &program, bool lower_y_pulses = false);

CircuitProgram concat(const CircuitProgram &a, const CircuitProgram &b);

}  // namespace qudit

#endif
