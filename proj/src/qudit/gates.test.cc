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

#include <numbers>

#include "gtest/gtest.h"
#include "qudit/error.h"
#include "qudit/json_io.h"
#include "qudit/oracle.h"
#include "test_util.h"

using namespace qudit;
using namespace qudit::testing;

namespace {

const double kR = std::numbers::sqrt2 / 2;
const cx kEighth = std::polar(1.0, std::numbers::pi / 4);

CMatrix golden(const std::string &name) {
    return matrix_from_json(Json::parse(read_text(std::string(QUDIT_GOLDEN_DIR) + "/" + name + ".json")));
}

// Textbook two-qubit gates typed out literally in |a b> order.
CMatrix literal(std::initializer_list<std::initializer_list<cx>> rows) {
    CMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
    Eigen::Index r = 0;
    for (auto row : rows) {
        Eigen::Index c = 0;
        for (auto v : row) {
            m(r, c++) = v;
        }
        r++;
    }
    return m;
}

CVector ket(std::initializer_list<cx> amps) {
    CVector v(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (auto a : amps) {
        v(i++) = a;
    }
    return v;
}

CVector column_after(const GateSpec &g, LevelIndex input) {
    return apply(g.sequence, StateVector::basis(5, input)).amplitudes();
}

}  // namespace

TEST(gates, hadamard_a_reproduces_table) {
    auto g = hadamard_sequence(Subsystem::A);
    ASSERT_EQ(g.sequence.size(), 4u);
    ASSERT_EQ(g.sequence.count(Axis::X), 4u);
    ASSERT_LE(max_abs_diff(evaluate(g.sequence).matrix(), golden("h_a")), 1e-12);
    ASSERT_LE(max_abs_diff(g.reference.matrix(), golden("h_a")), 1e-15);
    ASSERT_EQ(g.reference(4, 4), cx(1.0));
}

TEST(gates, hadamard_a_on_ground_state) {
    auto g = hadamard_sequence(Subsystem::A);
    // Naive product of the four closed-form pulse matrices, applied to |0>.
    CMatrix oracle = to_eigen(naive_product(g.sequence.pulses(), 5));
    CVector expected = ket({kR, 0, kR, 0, 0});
    ASSERT_LE(max_abs_diff(oracle.col(0), expected), 1e-12);
    ASSERT_LE(max_abs_diff(column_after(g, 0), expected), 1e-12);
    ASSERT_LE(max_abs_diff(column_after(g, 2), ket({kR, 0, -kR, 0, 0})), 1e-12);
}

TEST(gates, hadamard_b_leaves_ancilla_alone) {
    auto g = hadamard_sequence(Subsystem::B);
    ASSERT_LE(max_abs_diff(column_after(g, 4), ket({0, 0, 0, 0, 1})), 1e-15);
    ASSERT_LE(max_abs_diff(evaluate(g.sequence).matrix(), golden("h_b")), 1e-12);
}

TEST(gates, t_gate_phase_triples) {
    for (Subsystem target : {Subsystem::A, Subsystem::B}) {
        auto g = t_sequence(target);
        ASSERT_EQ(g.sequence.size(), 6u);
        // Chronologically the (3,4) triple runs first, then the (target,4) triple.
        LevelIndex levels[2] = {3, target == Subsystem::A ? LevelIndex{2} : LevelIndex{1}};
        for (int half = 0; half < 2; half++) {
            std::vector<Pulse> triple(g.sequence.pulses().begin() + 3 * half, g.sequence.pulses().begin() + 3 * half + 3);
            for (const auto &p : triple) {
                ASSERT_EQ(p.j, levels[half]);
                ASSERT_EQ(p.k, 4u);
            }
            CMatrix expected = CMatrix::Identity(5, 5);
            expected(static_cast<Eigen::Index>(levels[half]), static_cast<Eigen::Index>(levels[half])) = kEighth;
            expected(4, 4) = std::conj(kEighth);
            ASSERT_LE(max_abs_diff(to_eigen(naive_product(triple, 5)), expected), 1e-12);
        }
    }
}

TEST(gates, t_gate_reference) {
    auto a = t_sequence(Subsystem::A);
    ASSERT_EQ(a.reference(4, 4), cx(0, -1));
    ASSERT_LE(std::abs(determinant(a.reference) - cx(1.0)), 1e-12);
    ASSERT_LE(max_abs_diff(a.reference.matrix(), golden("t_a")), 1e-15);
    ASSERT_LE(max_abs_diff(evaluate(a.sequence).matrix(), golden("t_a")), 1e-12);
    auto b = t_sequence(Subsystem::B);
    ASSERT_LE(max_abs_diff(b.reference.matrix(), golden("t_b")), 1e-15);
    ASSERT_LE(max_abs_diff(evaluate(b.sequence).matrix(), golden("t_b")), 1e-12);
}

TEST(gates, cnot_a_to_b) {
    auto g = cnot_sequence(Subsystem::A);
    ASSERT_EQ(g.sequence.size(), 2u);
    ASSERT_EQ(g.sequence[0], Pulse::x(3, 4, 2.0));
    ASSERT_EQ(g.sequence[1], Pulse::y(2, 3, 1.0));
    ASSERT_LE(max_abs_diff(column_after(g, 2), ket({0, 0, 0, 1, 0})), 1e-15);
    ASSERT_LE(max_abs_diff(column_after(g, 3), ket({0, 0, 1, 0, 0})), 1e-15);
    ASSERT_LE(max_abs_diff(column_after(g, 4), ket({0, 0, 0, 0, -1})), 1e-15);
    ASSERT_LE(max_abs_diff(column_after(g, 0), ket({1, 0, 0, 0, 0})), 1e-15);
    ASSERT_LE(max_abs_diff(g.reference.matrix(), golden("cnot_ab")), 1e-15);
}

TEST(gates, cnot_b_to_a) {
    auto g = cnot_sequence(Subsystem::B);
    ASSERT_LE(max_abs_diff(column_after(g, 1), ket({0, 0, 0, 1, 0})), 1e-15);
    ASSERT_LE(max_abs_diff(column_after(g, 3), ket({0, 1, 0, 0, 0})), 1e-15);
    ASSERT_LE(max_abs_diff(g.reference.matrix(), golden("cnot_ba")), 1e-15);
    ASSERT_LE(max_abs_diff(evaluate(g.sequence).matrix(), golden("cnot_ba")), 1e-12);
}

TEST(gates, hadamard_on_both_qubits) {
    auto g = hadamard_both_sequence();
    ASSERT_EQ(g.sequence.size(), 7u);
    auto u = evaluate(g.sequence);
    ASSERT_TRUE(is_unitary(u.matrix()));
    ASSERT_LE(std::abs(determinant(u) - cx(1.0)), 1e-10);

    CMatrix h = literal({{kR, kR}, {kR, -kR}});
    CMatrix hh = kron(h, h);
    auto col3 = global_phase_distance(CMatrix(u.matrix().col(3).head(4)), CMatrix(hh.col(3)));
    ASSERT_LE(col3.residual, 1e-10);
    ASSERT_LE(max_abs_diff(hh.col(3), ket({0.5, -0.5, -0.5, 0.5})), 1e-15);

    auto report = verify_gate(g);
    ASSERT_TRUE(report.pass);
    ASSERT_LE(report.residual_phase_aligned, 1e-10);
    // Measured: the seven-pulse schedule equals H_A * H_B with no extra global phase.
    ASSERT_LE(std::abs(report.recovered_phase - cx(1.0)), 1e-11);
}

TEST(gates, oracle_two_is_x_on_second_qubit) {
    auto g = oracle_sequence(2);
    auto oracle = to_eigen(naive_product(g.sequence.pulses(), 5));
    CMatrix ix = CMatrix::Identity(5, 5);
    ix.topLeftCorner(4, 4) = literal({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    ASSERT_LE(max_abs_diff(oracle, ix), 1e-12);
    ASSERT_LE(max_abs_diff(evaluate(g.sequence).matrix(), ix), 1e-12);
}

TEST(gates, oracle_one_is_identity) {
    auto g = oracle_sequence(1);
    ASSERT_TRUE(g.sequence.empty());
    ASSERT_EQ(max_abs_diff(evaluate(g.sequence).matrix(), CMatrix::Identity(5, 5)), 0.0);
}

TEST(gates, oracle_four) {
    auto g = oracle_sequence(4);
    ASSERT_LE(max_abs_diff(column_after(g, 0), ket({0, 1, 0, 0, 0})), 1e-12);
    ASSERT_LE(max_abs_diff(column_after(g, 1), ket({1, 0, 0, 0, 0})), 1e-12);
    ASSERT_LE(max_abs_diff(column_after(g, 4), ket({0, 0, 0, 0, -1})), 1e-12);
    ASSERT_LE(std::abs(determinant(evaluate(g.sequence)) - cx(1.0)), 1e-12);
}

TEST(gates, oracles_flip_target_by_function_value) {
    for (int j = 1; j <= 4; j++) {
        auto f = boolean_oracle(j);
        auto u = evaluate(oracle_sequence(j).sequence);
        for (unsigned x = 0; x < 2; x++) {
            for (unsigned y = 0; y < 2; y++) {
                auto in = map_qubits_to_level(QubitPair(x, y));
                auto out = map_qubits_to_level(QubitPair(x, y ^ f(x)));
                for (LevelIndex r = 0; r < 5; r++) {
                    ASSERT_LE(std::abs(u(r, in) - cx(r == out ? 1.0 : 0.0)), 1e-11) << j << " " << in << " " << r;
                }
            }
        }
    }
}

TEST(gates, invalid_oracle) {
    ASSERT_EQ(kind_of([] { oracle_sequence(0); }), ErrorKind::InvalidOracle);
    ASSERT_EQ(kind_of([] { oracle_sequence(5); }), ErrorKind::InvalidOracle);
}

TEST(gates, verify_hadamard_exactly) {
    auto r = verify_gate(hadamard_sequence(Subsystem::A), 1e-10);
    ASSERT_TRUE(r.pass);
    ASSERT_LE(std::abs(r.recovered_phase - cx(1.0)), 1e-12);
    ASSERT_LE(r.residual_exact, 1e-12);
}

TEST(gates, verify_rejects_wrong_sequence) {
    GateSpec bogus{
        "bogus", PulseSequence(5, {Pulse::x(0, 1, 1.0)}), UnitaryMatrix::identity(5), UnitaryMatrix::identity(4)};
    auto r = verify_gate(bogus, 1e-10);
    ASSERT_FALSE(r.pass);
    ASSERT_GT(r.residual_phase_aligned, 0.9);
}

TEST(gates, verify_t_gate_with_unit_phase) {
    auto r = verify_gate(t_sequence(Subsystem::A));
    ASSERT_TRUE(r.pass);
    ASSERT_LE(std::abs(r.recovered_phase - cx(1.0)), 1e-12);
}

TEST(gates, catalog_invariants) {
    auto catalog = gate_catalog();
    ASSERT_EQ(catalog.size(), 11u);
    for (const auto &g : catalog) {
        auto r = verify_gate(g, 1e-10);
        ASSERT_TRUE(r.pass) << g.name;
        ASSERT_LE(r.residual_phase_aligned, r.residual_exact) << g.name;
        ASSERT_LE(std::abs(determinant(g.reference) - cx(1.0)), 1e-12) << g.name;
        ASSERT_LE(max_abs_diff(g.reference.leading_block(4), g.logical.matrix()), 1e-15) << g.name;
    }
    for (const char *name : {"H_A", "H_B", "T_A", "T_B", "CNOT_AB", "CNOT_BA"}) {
        auto r = verify_gate(gate_by_name(name));
        ASSERT_LE(r.residual_exact, 1e-11) << name;
        ASSERT_LE(std::abs(r.recovered_phase - cx(1.0)), 1e-11) << name;
    }
}

TEST(gates, logical_blocks_match_textbook_gates) {
    CMatrix h = literal({{kR, kR}, {kR, -kR}});
    CMatrix t = literal({{1, 0}, {0, kEighth}});
    CMatrix id = CMatrix::Identity(2, 2);
    CMatrix cnot_ab = literal({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    CMatrix cnot_ba = literal({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
    std::vector<std::pair<std::string, CMatrix>> expected = {
        {"H_A", kron(h, id)},
        {"H_B", kron(id, h)},
        {"T_A", kron(t, id)},
        {"T_B", kron(id, t)},
        {"CNOT_AB", cnot_ab},
        {"CNOT_BA", cnot_ba},
    };
    for (const auto &[name, m] : expected) {
        ASSERT_LE(max_abs_diff(gate_by_name(name).logical.matrix(), m), 1e-15) << name;
    }
}

TEST(gates, involutions) {
    auto cnot = evaluate(cnot_sequence(Subsystem::A).sequence);
    ASSERT_LE(global_phase_distance(cnot * cnot, UnitaryMatrix::identity(5)).residual, 1e-12);
    auto h = evaluate(hadamard_sequence(Subsystem::A).sequence);
    auto hh = (h * h).leading_block(4);
    ASSERT_LE(global_phase_distance(hh, CMatrix::Identity(4, 4)).residual, 1e-12);
}

TEST(gates, lookup_by_name) {
    ASSERT_EQ(gate_by_name("ORACLE_3").name, "U3");
    ASSERT_EQ(gate_by_name("U3").sequence, cnot_sequence(Subsystem::A).sequence);
    ASSERT_EQ(kind_of([] { gate_by_name("SWAP"); }), ErrorKind::UnknownGate);
}
