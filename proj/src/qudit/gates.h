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

#ifndef QUDIT_GATES_H
#define QUDIT_GATES_H

#include <string>
#include <vector>

#include "qudit/levels.h"
#include "qudit/matrix.h"
#include "qudit/pulse.h"

namespace qudit {

/// A named gate of the five-level instruction set.
///
/// `sequence` is the chronological pulse program (Y pulses kept unexpanded),
/// `reference` the 5x5 target including the ancilla phase that lifts the
/// U(4) logical action into SU(5), and `logical` the 4x4 two-qubit action on
/// levels 0..3.
struct GateSpec {
    std::string name;
    PulseSequence sequence;
    UnitaryMatrix reference;
    UnitaryMatrix logical;
};

struct VerificationReport {
    std::string name;
    double residual_exact;
    double residual_phase_aligned;
    Complex recovered_phase;
    /// Phase-aligned distance between the evaluated 4x4 block and `logical`.
    double residual_logical;
    bool pass;
};

namespace logical_gates {
CMatrix hadamard();
CMatrix t_gate();
CMatrix pauli_x();
CMatrix identity2();
/// Textbook CNOT with the given subsystem as control, in the |a b> ordering.
CMatrix cnot(Subsystem control);
}  // namespace logical_gates

GateSpec hadamard_sequence(Subsystem target);
GateSpec t_sequence(Subsystem target);
GateSpec cnot_sequence(Subsystem control);
GateSpec hadamard_both_sequence();
/// Pulse realization of U_j |x>|y> = |x>|y XOR f_j(x)>. Throws InvalidOracle.
GateSpec oracle_sequence(int j);

/// H_A, H_B, H_AB, T_A, T_B, CNOT_AB, CNOT_BA, U1..U4 in that order.
std::vector<GateSpec> gate_catalog();

/// Looks a gate up by catalog name. ORACLE_j is accepted as an alias for Uj.
/// Throws UnknownGate.
GateSpec gate_by_name(const std::string &name);

VerificationReport verify_gate(const GateSpec &spec, double tolerance = tol::kPhysics);

}  // namespace qudit

#endif
