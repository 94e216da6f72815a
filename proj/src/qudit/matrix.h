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

#ifndef QUDIT_MATRIX_H
#define QUDIT_MATRIX_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

namespace qudit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace tol {
/// Physical invariants: unitarity, normalization, trace, PSD floor.
inline constexpr double kPhysics = 1e-10;
/// Algebraic identities between short products of small matrices.
inline constexpr double kAlgebra = 1e-12;
/// Below this |tr(U^dagger V)| the phase alignment falls back to 1.
inline constexpr double kZeroTrace = 1e-12;
}  // namespace tol

/// Largest entrywise modulus of (a - b). Shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

bool is_unitary(const CMatrix &m, double tolerance = tol::kPhysics);

class StateVector {
   public:
    explicit StateVector(CVector amplitudes);

    static StateVector basis(size_t dim, size_t index);

    size_t dim() const {
        return static_cast<size_t>(amplitudes_.size());
    }
    const CVector &amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](size_t i) const {
        return amplitudes_(static_cast<Eigen::Index>(i));
    }

    double norm() const;
    bool is_normalized(double tolerance = tol::kPhysics) const;
    /// |a_i|^2 for each level.
    std::vector<double> populations() const;

    StateVector scaled(Complex c) const;

   private:
    CVector amplitudes_;
};

/// Square matrix with U U^dagger = I checked at construction.
class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(CMatrix m, double tolerance = tol::kPhysics);

    static UnitaryMatrix identity(size_t dim);
    static UnitaryMatrix diagonal(const std::vector<Complex> &entries);
    /// Skips the unitarity check. For products of matrices that are already unitary.
    static UnitaryMatrix trusted(CMatrix m);

    size_t dim() const {
        return static_cast<size_t>(m_.rows());
    }
    const CMatrix &matrix() const {
        return m_;
    }
    Complex operator()(size_t row, size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    UnitaryMatrix adjoint() const;
    /// Upper-left n x n block, not checked for unitarity.
    CMatrix leading_block(size_t n) const;

    UnitaryMatrix operator*(const UnitaryMatrix &rhs) const;
    StateVector operator*(const StateVector &rhs) const;

   private:
    struct TrustedTag {};
    UnitaryMatrix(CMatrix m, TrustedTag) : m_(std::move(m)) {
    }

    CMatrix m_;
};

/// Hermitian, unit-trace, positive semidefinite.
class DensityMatrix {
   public:
    explicit DensityMatrix(CMatrix m, double tolerance = tol::kPhysics);

    static DensityMatrix pure(const StateVector &psi);

    size_t dim() const {
        return static_cast<size_t>(m_.rows());
    }
    const CMatrix &matrix() const {
        return m_;
    }
    Complex operator()(size_t row, size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    Complex trace() const {
        return m_.trace();
    }

    DensityMatrix conjugated_by(const UnitaryMatrix &u) const;

   private:
    CMatrix m_;
};

struct PhaseAlignment {
    Complex phase;
    double residual;
};

/// Finds the unit scalar c best aligning c*u with v (c = tr(u^dagger v) / |tr(u^dagger v)|,
/// or 1 when that trace vanishes) and reports max|c*u - v|. Works for any equal shapes,
/// including column vectors.
PhaseAlignment global_phase_distance(const CMatrix &u, const CMatrix &v);
PhaseAlignment global_phase_distance(const UnitaryMatrix &u, const UnitaryMatrix &v);
PhaseAlignment global_phase_distance(const StateVector &u, const StateVector &v);

Complex determinant(const CMatrix &m);
Complex determinant(const UnitaryMatrix &u);

/// Block-diagonal 5x5 operator: g on levels 0..3 and ancilla_phase on level 4.
UnitaryMatrix embed_two_qubit(const UnitaryMatrix &g, Complex ancilla_phase);

CMatrix kron(const CMatrix &a, const CMatrix &b);

}  // namespace qudit

#endif
