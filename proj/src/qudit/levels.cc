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

#include "qudit/levels.h"

#include <string>

#include "qudit/error.h"

namespace qudit {

QubitPair::QubitPair(unsigned a_bit, unsigned b_bit) : a(static_cast<uint8_t>(a_bit)), b(static_cast<uint8_t>(b_bit)) {
    if (a_bit > 1 || b_bit > 1) {
        throw QuditError(ErrorKind::OutOfRange, "qubit labels must be 0 or 1");
    }
}

QubitPair map_level_to_qubits(LevelIndex level) {
    if (level == kAncillaLevel) {
        throw QuditError(ErrorKind::AncillaLevel, "level 4 is the ancilla and has no qubit image");
    }
    if (level >= kQuditDim) {
        throw QuditError(ErrorKind::OutOfRange, "level " + std::to_string(level) + " does not exist for d=5");
    }
    return QubitPair(static_cast<unsigned>(level / 2), static_cast<unsigned>(level % 2));
}

LevelIndex map_qubits_to_level(QubitPair pair) {
    return 2 * static_cast<LevelIndex>(pair.a) + static_cast<LevelIndex>(pair.b);
}

DensityMatrix reduce_subsystem(const DensityMatrix &rho, Subsystem which, double ancilla_tolerance) {
    if (rho.dim() != kQuditDim) {
        throw QuditError(ErrorKind::DimensionMismatch, "reduce_subsystem expects a 5-level density matrix");
    }
    if (rho(kAncillaLevel, kAncillaLevel).real() > ancilla_tolerance) {
        throw QuditError(ErrorKind::AncillaPopulated, "ancilla level carries population");
    }
    // rho_A[a][a'] = sum_b rho[2a+b][2a'+b]; rho_B[b][b'] = sum_a rho[2a+b][2a+b'].
    CMatrix out = CMatrix::Zero(2, 2);
    for (unsigned r = 0; r < 2; r++) {
        for (unsigned c = 0; c < 2; c++) {
            for (unsigned t = 0; t < 2; t++) {
                QubitPair row = which == Subsystem::A ? QubitPair(r, t) : QubitPair(t, r);
                QubitPair col = which == Subsystem::A ? QubitPair(c, t) : QubitPair(t, c);
                out(r, c) += rho(map_qubits_to_level(row), map_qubits_to_level(col));
            }
        }
    }
    return DensityMatrix(std::move(out));
}

}  // namespace qudit
