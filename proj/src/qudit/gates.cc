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

#include "qudit/gates.h"

#include <cmath>
#include <numbers>

#include "qudit/error.h"
#include "qudit/oracle.h"

namespace qudit {

namespace logical_gates {

CMatrix hadamard() {
    CMatrix h(2, 2);
    double r = std::numbers::sqrt2 / 2.0;
    h << r, r, r, -r;
    return h;
}

CMatrix t_gate() {
    CMatrix t = CMatrix::Identity(2, 2);
    t(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
    return t;
}

CMatrix pauli_x() {
    CMatrix x = CMatrix::Zero(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    return x;
}

CMatrix identity2() {
    return CMatrix::Identity(2, 2);
}

CMatrix cnot(Subsystem control) {
    CMatrix m = CMatrix::Zero(4, 4);
    for (unsigned a = 0; a < 2; a++) {
        for (unsigned b = 0; b < 2; b++) {
            QubitPair in(a, b);
            QubitPair out = control == Subsystem::A ? QubitPair(a, b ^ a) : QubitPair(a ^ b, b);
            m(static_cast<Eigen::Index>(map_qubits_to_level(out)), static_cast<Eigen::Index>(map_qubits_to_level(in))) =
                1.0;
        }
    }
    return m;
}

}  // namespace logical_gates

namespace {

const Complex kMinusI{0.0, -1.0};

GateSpec make_spec(std::string name, PulseSequence seq, const CMatrix &logical, Complex ancilla_phase) {
    UnitaryMatrix g(logical);
    UnitaryMatrix reference = embed_two_qubit(g, ancilla_phase);
    return {std::move(name), std::move(seq), std::move(reference), std::move(g)};
}

CMatrix on_a(const CMatrix &one_qubit) {
    return kron(one_qubit, logical_gates::identity2());
}

CMatrix on_b(const CMatrix &one_qubit) {
    return kron(logical_gates::identity2(), one_qubit);
}

// [Y_k4(7/2) X_k4(7/2) Y_k4(1/2)] as an operator product; on (k, 4) it is diag(e^{i pi/4}, e^{-i pi/4}).
std::vector<Pulse> phase_triple(LevelIndex k) {
    return {Pulse::y(k, 4, 3.5), Pulse::x(k, 4, 3.5), Pulse::y(k, 4, 0.5)};
}

}  // namespace

GateSpec hadamard_sequence(Subsystem target) {
    // Outer pulses swap levels so the shared middle pair acts on the target qubit.
    LevelIndex swap_low = target == Subsystem::A ? 2 : 1;
    auto seq = PulseSequence::from_operator_product(
        {Pulse::x(swap_low, 3, 1.0), Pulse::x(1, 2, 3.5), Pulse::x(0, 3, 3.5), Pulse::x(swap_low, 3, 1.0)});
    if (target == Subsystem::A) {
        return make_spec("H_A", std::move(seq), on_a(logical_gates::hadamard()), 1.0);
    }
    return make_spec("H_B", std::move(seq), on_b(logical_gates::hadamard()), 1.0);
}

GateSpec t_sequence(Subsystem target) {
    LevelIndex first = target == Subsystem::A ? 2 : 1;
    std::vector<Pulse> product = phase_triple(first);
    auto second = phase_triple(3);
    product.insert(product.end(), second.begin(), second.end());
    auto seq = PulseSequence::from_operator_product(std::move(product));
    if (target == Subsystem::A) {
        return make_spec("T_A", std::move(seq), on_a(logical_gates::t_gate()), kMinusI);
    }
    return make_spec("T_B", std::move(seq), on_b(logical_gates::t_gate()), kMinusI);
}

GateSpec cnot_sequence(Subsystem control) {
    LevelIndex partner = control == Subsystem::A ? 2 : 1;
    auto seq = PulseSequence::from_operator_product({Pulse::y(partner, 3, 1.0), Pulse::x(3, 4, 2.0)});
    return make_spec(
        control == Subsystem::A ? "CNOT_AB" : "CNOT_BA", std::move(seq), logical_gates::cnot(control), -1.0);
}

GateSpec hadamard_both_sequence() {
    auto seq = PulseSequence::from_operator_product({
        Pulse::x(1, 2, 1.0),
        Pulse::x(2, 3, 0.5),
        Pulse::x(0, 1, 3.5),
        Pulse::x(1, 3, 2.5),
        Pulse::x(0, 2, 3.5),
        Pulse::x(1, 2, 3.0),
        Pulse::x(1, 3, 2.0),
    });
    UnitaryMatrix reference = hadamard_sequence(Subsystem::A).reference * hadamard_sequence(Subsystem::B).reference;
    UnitaryMatrix logical(kron(logical_gates::hadamard(), logical_gates::hadamard()));
    return {"H_AB", std::move(seq), std::move(reference), std::move(logical)};
}

GateSpec oracle_sequence(int j) {
    BooleanOracle f = boolean_oracle(j);

    CMatrix logical = CMatrix::Zero(4, 4);
    for (unsigned x = 0; x < 2; x++) {
        for (unsigned y = 0; y < 2; y++) {
            auto in = map_qubits_to_level(QubitPair(x, y));
            auto out = map_qubits_to_level(QubitPair(x, y ^ f(x)));
            logical(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) = 1.0;
        }
    }

    std::vector<Pulse> product;
    Complex ancilla = 1.0;
    switch (j) {
        case 1:
            break;
        case 2:
            // Y_02(2 pi) = diag(-1, 1, -1, 1, 1) undoes the signs the two Y(pi) swaps leave behind.
            product = {Pulse::y(0, 2, 2.0), Pulse::y(0, 1, 1.0), Pulse::y(2, 3, 1.0)};
            break;
        case 3:
            product = {Pulse::y(2, 3, 1.0), Pulse::x(3, 4, 2.0)};
            ancilla = -1.0;
            break;
        case 4:
            product = {Pulse::y(0, 1, 1.0), Pulse::x(1, 4, 2.0)};
            ancilla = -1.0;
            break;
    }
    return make_spec(
        "U" + std::to_string(j), PulseSequence::from_operator_product(std::move(product)), logical, ancilla);
}

std::vector<GateSpec> gate_catalog() {
    std::vector<GateSpec> out;
    out.push_back(hadamard_sequence(Subsystem::A));
    out.push_back(hadamard_sequence(Subsystem::B));
    out.push_back(hadamard_both_sequence());
    out.push_back(t_sequence(Subsystem::A));
    out.push_back(t_sequence(Subsystem::B));
    out.push_back(cnot_sequence(Subsystem::A));
    out.push_back(cnot_sequence(Subsystem::B));
    for (int j = 1; j <= kOracleCount; j++) {
        out.push_back(oracle_sequence(j));
    }
    return out;
}

GateSpec gate_by_name(const std::string &name) {
    if (name == "H_A") {
        return hadamard_sequence(Subsystem::A);
    }
    if (name == "H_B") {
        return hadamard_sequence(Subsystem::B);
    }
    if (name == "H_AB") {
        return hadamard_both_sequence();
    }
    if (name == "T_A") {
        return t_sequence(Subsystem::A);
    }
    if (name == "T_B") {
        return t_sequence(Subsystem::B);
    }
    if (name == "CNOT_AB") {
        return cnot_sequence(Subsystem::A);
    }
    if (name == "CNOT_BA") {
        return cnot_sequence(Subsystem::B);
    }
    for (int j = 1; j <= kOracleCount; j++) {
        auto id = std::to_string(j);
        if (name == "U" + id || name == "ORACLE_" + id) {
            return oracle_sequence(j);
        }
    }
    throw QuditError(ErrorKind::UnknownGate, "no gate named '" + name + "'");
}

VerificationReport verify_gate(const GateSpec &spec, double tolerance) {
    UnitaryMatrix actual = evaluate(spec.sequence);
    VerificationReport report;
    report.name = spec.name;
    report.residual_exact = max_abs_diff(actual.matrix(), spec.reference.matrix());

    // The trace-optimal phase is not always the max-norm optimum; keep whichever of
    // {aligned, identity} is closer so the aligned residual never exceeds the exact one.
    auto aligned = global_phase_distance(actual, spec.reference);
    if (aligned.residual <= report.residual_exact) {
        report.residual_phase_aligned = aligned.residual;
        report.recovered_phase = aligned.phase;
    } else {
        report.residual_phase_aligned = report.residual_exact;
        report.recovered_phase = 1.0;
    }

    report.residual_logical = global_phase_distance(actual.leading_block(kLogicalDim), spec.logical.matrix()).residual;
    report.pass = report.residual_phase_aligned <= tolerance && report.residual_logical <= tolerance;
    return report;
}

}  // namespace qudit
