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

#ifndef QUDIT_LEVELS_H
#define QUDIT_LEVELS_H

#include <cstddef>
#include <cstdint>

#include "qudit/matrix.h"

namespace qudit {

using LevelIndex = size_t;

inline constexpr size_t kQuditDim = 5;
inline constexpr size_t kLogicalDim = 4;
inline constexpr LevelIndex kAncillaLevel = 4;

/// Computational-basis label |a>_A (x) |b>_B of one of the four logical levels.
struct QubitPair {
    uint8_t a;
    uint8_t b;

    QubitPair(unsigned a, unsigned b);

    bool operator==(const QubitPair &other) const = default;
};

/// Level l in {0,1,2,3} carries |l div 2>_A (x) |l mod 2>_B. Subsystem A is the high bit.
QubitPair map_level_to_qubits(LevelIndex level);
LevelIndex map_qubits_to_level(QubitPair pair);

enum class Subsystem { A, B };

/// Two-level state of one virtual qubit, read off the 4x4 logical block of a
/// five-level density matrix. The ancilla population must be negligible.
DensityMatrix reduce_subsystem(
    const DensityMatrix &rho, Subsystem which, double ancilla_tolerance = tol::kPhysics);

}  // namespace qudit

#endif
