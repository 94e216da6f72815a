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

#include "qudit/matrix.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "qudit/error.h"
#include "qudit/json_io.h"
#include "qudit/levels.h"
#include "test_util.h"

using namespace qudit;
using namespace qudit::testing;

namespace {

CMatrix golden(const std::string &name) {
    return matrix_from_json(Json::parse(read_text(std::string(QUDIT_GOLDEN_DIR) + "/" + name + ".json")));
}


const cx kEighth = std::polar(1.0, std::numbers::pi / 4);

}  // namespace

TEST(matrix, phase_distance_identity_and_negation) {
    std::mt19937_64 rng(1);
    UnitaryMatrix u(random_unitary(rng, 5));
    auto same = global_phase_distance(u, u);
    ASSERT_LE(std::abs(same.phase - cx(1.0)), 1e-12);
    ASSERT_LE(same.residual, 1e-12);

    UnitaryMatrix neg(-u.matrix());
    auto flipped = global_phase_distance(u, neg);
    ASSERT_LE(std::abs(flipped.phase - cx(-1.0)), 1e-12);
    ASSERT_LE(flipped.residual, 1e-12);
}

TEST(matrix, relative_phase_is_not_global) {
    auto id = UnitaryMatrix::identity(5);
    auto z4 = UnitaryMatrix::diagonal({1, 1, 1, 1, -1});
    // tr = 3, so the alignment keeps phase 1 and the last entry differs by 2.
    auto d = global_phase_distance(id, z4);
    ASSERT_GT(d.residual, 0.5);
    ASSERT_NEAR(d.residual, 2.0, 1e-15);
}

TEST(matrix, zero_overlap_falls_back_to_unit_phase) {
    auto z = UnitaryMatrix::diagonal({1, -1});
    auto d = global_phase_distance(z, UnitaryMatrix::identity(2));
    ASSERT_EQ(d.phase, cx(1.0));
    ASSERT_NEAR(d.residual, 2.0, 1e-15);
}

TEST(matrix, phase_distance_properties) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    for (int trial = 0; trial < 50; trial++) {
        CMatrix u = random_unitary(rng, 5);
        cx c = std::polar(1.0, angle(rng));
        ASSERT_LE(global_phase_distance(c * u, u).residual, 1e-12);

        CMatrix v = random_unitary(rng, 5);
        cx g = std::polar(1.0, angle(rng));
        double base = global_phase_distance(u, v).residual;
        ASSERT_NEAR(global_phase_distance(g * u, g * v).residual, base, 1e-12);
    }
}

TEST(matrix, phase_distance_dimension_mismatch) {
    ASSERT_EQ(
        kind_of([] { global_phase_distance(UnitaryMatrix::identity(4), UnitaryMatrix::identity(5)); }),
        ErrorKind::DimensionMismatch);
}

TEST(matrix, embed_reproduces_table_entries) {
    UnitaryMatrix cnot(CMatrix((CMatrix(4, 4) << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0).finished()));
    ASSERT_LE(max_abs_diff(embed_two_qubit(cnot, -1.0).matrix(), golden("cnot_ab")), 1e-15);

    auto t_on_a = UnitaryMatrix::diagonal({1, 1, kEighth, kEighth});
    ASSERT_LE(max_abs_diff(embed_two_qubit(t_on_a, cx(0, -1)).matrix(), golden("t_a")), 1e-15);

    ASSERT_LE(max_abs_diff(embed_two_qubit(UnitaryMatrix::identity(4), 1.0).matrix(), CMatrix::Identity(5, 5)), 0.0);
}

TEST(matrix, embed_errors) {
    ASSERT_EQ(kind_of([] { embed_two_qubit(UnitaryMatrix::identity(4), 2.0); }), ErrorKind::NotUnitPhase);
    ASSERT_EQ(kind_of([] { embed_two_qubit(UnitaryMatrix::identity(5), 1.0); }), ErrorKind::DimensionMismatch);
    ASSERT_EQ(kind_of([] { UnitaryMatrix(CMatrix::Constant(4, 4, 0.5)); }), ErrorKind::NotUnitary);
}

TEST(matrix, embed_properties) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    for (int trial = 0; trial < 50; trial++) {
        UnitaryMatrix g(random_unitary(rng, 4));
        cx phase = std::polar(1.0, angle(rng));
        auto e = embed_two_qubit(g, phase);
        ASSERT_TRUE(is_unitary(e.matrix()));
        ASSERT_LE(std::abs(determinant(e) - determinant(g) * phase), 1e-12);
    }
}

TEST(matrix, determinants) {
    ASSERT_LE(std::abs(determinant(UnitaryMatrix::identity(5)) - cx(1.0)), 1e-15);
    auto t5 = UnitaryMatrix::diagonal({1, 1, kEighth, kEighth, cx(0, -1)});
    ASSERT_LE(std::abs(determinant(t5) - cx(1.0)), 1e-12);
    CMatrix t = CMatrix::Identity(2, 2);
    t(1, 1) = kEighth;
    ASSERT_LE(std::abs(determinant(kron(t, CMatrix::Identity(2, 2))) - cx(0, 1)), 1e-12);
    ASSERT_LE(std::abs(determinant(kron(CMatrix::Identity(2, 2), t)) - cx(0, 1)), 1e-12);
}

TEST(matrix, density_matrix_validation) {
    ASSERT_EQ(kind_of([] { DensityMatrix(CMatrix::Identity(2, 2)); }), ErrorKind::NotDensityMatrix);
    CMatrix non_hermitian = CMatrix::Zero(2, 2);
    non_hermitian(0, 0) = 1;
    non_hermitian(0, 1) = 0.3;
    ASSERT_EQ(kind_of([&] { DensityMatrix{non_hermitian}; }), ErrorKind::NotDensityMatrix);
    CMatrix negative = CMatrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    ASSERT_EQ(kind_of([&] { DensityMatrix{negative}; }), ErrorKind::NotDensityMatrix);
}

TEST(matrix, state_vector_basics) {
    auto s = StateVector::basis(5, 3);
    ASSERT_TRUE(s.is_normalized());
    ASSERT_EQ(s.populations(), (std::vector<double>{0, 0, 0, 1, 0}));
    ASSERT_EQ(kind_of([] { StateVector::basis(5, 5); }), ErrorKind::OutOfRange);
    ASSERT_EQ(kind_of([] { UnitaryMatrix::identity(4) * StateVector::basis(5, 0); }), ErrorKind::DimensionMismatch);
}
