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

#include <cmath>
#include <string>

#include "qudit/error.h"
#include "qudit/levels.h"

namespace qudit {

namespace {

void require_square(const CMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw QuditError(
            ErrorKind::DimensionMismatch,
            std::string(what) + " must be square and non-empty, got " + std::to_string(m.rows()) + "x" +
                std::to_string(m.cols()));
    }
}

}  // namespace

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw QuditError(ErrorKind::DimensionMismatch, "max_abs_diff: shapes differ");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const CMatrix &m, double tolerance) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return false;
    }
    CMatrix id = CMatrix::Identity(m.rows(), m.cols());
    return max_abs_diff(m * m.adjoint(), id) <= tolerance;
}

StateVector::StateVector(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw QuditError(ErrorKind::DimensionMismatch, "StateVector needs a positive dimension");
    }
}

StateVector StateVector::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw QuditError(
            ErrorKind::OutOfRange,
            "basis index " + std::to_string(index) + " outside dimension " + std::to_string(dim));
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
}

double StateVector::norm() const {
    return amplitudes_.norm();
}

bool StateVector::is_normalized(double tolerance) const {
    return std::abs(amplitudes_.squaredNorm() - 1.0) <= tolerance;
}

std::vector<double> StateVector::populations() const {
    std::vector<double> out(dim());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = std::norm((*this)[i]);
    }
    return out;
}

StateVector StateVector::scaled(Complex c) const {
    return StateVector(amplitudes_ * c);
}

UnitaryMatrix::UnitaryMatrix(CMatrix m, double tolerance) : m_(std::move(m)) {
    require_square(m_, "UnitaryMatrix");
    if (!is_unitary(m_, tolerance)) {
        throw QuditError(ErrorKind::NotUnitary, "U U^dagger deviates from identity");
    }
}

UnitaryMatrix UnitaryMatrix::identity(size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return UnitaryMatrix(CMatrix::Identity(n, n), TrustedTag{});
}

UnitaryMatrix UnitaryMatrix::diagonal(const std::vector<Complex> &entries) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(entries.size()), static_cast<Eigen::Index>(entries.size()));
    for (size_t i = 0; i < entries.size(); i++) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
    }
    return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::trusted(CMatrix m) {
    require_square(m, "UnitaryMatrix");
    return UnitaryMatrix(std::move(m), TrustedTag{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    return UnitaryMatrix(m_.adjoint(), TrustedTag{});
}

CMatrix UnitaryMatrix::leading_block(size_t n) const {
    if (n > dim()) {
        throw QuditError(ErrorKind::DimensionMismatch, "leading block larger than matrix");
    }
    auto k = static_cast<Eigen::Index>(n);
    return m_.topLeftCorner(k, k);
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix &rhs) const {
    if (dim() != rhs.dim()) {
        throw QuditError(ErrorKind::DimensionMismatch, "operator product of different dimensions");
    }
    return UnitaryMatrix(m_ * rhs.m_, TrustedTag{});
}

StateVector UnitaryMatrix::operator*(const StateVector &rhs) const {
    if (dim() != rhs.dim()) {
        throw QuditError(
            ErrorKind::DimensionMismatch,
            "operator of dimension " + std::to_string(dim()) + " applied to state of dimension " +
                std::to_string(rhs.dim()));
    }
    return StateVector(m_ * rhs.amplitudes());
}

DensityMatrix::DensityMatrix(CMatrix m, double tolerance) : m_(std::move(m)) {
    require_square(m_, "DensityMatrix");
    if (max_abs_diff(m_, m_.adjoint()) > tolerance) {
        throw QuditError(ErrorKind::NotDensityMatrix, "matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > tolerance) {
        throw QuditError(ErrorKind::NotDensityMatrix, "trace differs from 1");
    }
    CMatrix hermitian_part = (m_ + m_.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tolerance) {
        throw QuditError(ErrorKind::NotDensityMatrix, "matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::conjugated_by(const UnitaryMatrix &u) const {
    if (u.dim() != dim()) {
        throw QuditError(ErrorKind::DimensionMismatch, "conjugation by operator of different dimension");
    }
    return DensityMatrix(u.matrix() * m_ * u.matrix().adjoint());
}

PhaseAlignment global_phase_distance(const CMatrix &u, const CMatrix &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw QuditError(ErrorKind::DimensionMismatch, "global_phase_distance: shapes differ");
    }
    // tr(u^dagger v) as a Frobenius inner product so non-square (vector) inputs work.
    Complex overlap = (u.conjugate().cwiseProduct(v)).sum();
    Complex phase = 1.0;
    if (std::abs(overlap) > tol::kZeroTrace) {
        phase = overlap / std::abs(overlap);
    }
    return {phase, max_abs_diff(phase * u, v)};
}

PhaseAlignment global_phase_distance(const UnitaryMatrix &u, const UnitaryMatrix &v) {
    return global_phase_distance(u.matrix(), v.matrix());
}

PhaseAlignment global_phase_distance(const StateVector &u, const StateVector &v) {
    return global_phase_distance(CMatrix(u.amplitudes()), CMatrix(v.amplitudes()));
}

Complex determinant(const CMatrix &m) {
    require_square(m, "determinant argument");
    return m.partialPivLu().determinant();
}

Complex determinant(const UnitaryMatrix &u) {
    return determinant(u.matrix());
}

UnitaryMatrix embed_two_qubit(const UnitaryMatrix &g, Complex ancilla_phase) {
    if (g.dim() != kLogicalDim) {
        throw QuditError(ErrorKind::DimensionMismatch, "two-qubit gate must be 4x4");
    }
    if (std::abs(std::abs(ancilla_phase) - 1.0) > tol::kPhysics) {
        throw QuditError(ErrorKind::NotUnitPhase, "ancilla phase must have modulus 1");
    }
    auto n = static_cast<Eigen::Index>(kQuditDim);
    CMatrix m = CMatrix::Zero(n, n);
    m.topLeftCorner(4, 4) = g.matrix();
    m(4, 4) = ancilla_phase;
    return UnitaryMatrix::trusted(std::move(m));
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace qudit
