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

#ifndef QUDIT_PULSE_H
#define QUDIT_PULSE_H

#include <optional>
#include <string>
#include <vector>

#include "qudit/levels.h"
#include "qudit/matrix.h"

namespace qudit {

enum class Axis { X, Y };

/// A theta-pulse on the transition between levels j and k.
///
/// The angle is stored as a multiple of pi so schedules written as 7/2 or 3
/// survive serialization exactly; radians only appear at evaluation time.
/// An X pulse acts on span{|j>,|k>} as
///     [[cos(theta/2), -i sin(theta/2)], [-i sin(theta/2), cos(theta/2)]]
/// and a Y pulse as
///     [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]],
/// both with identity on every other level. The period in theta is 4 pi.
struct Pulse {
    Axis axis;
    LevelIndex j;
    LevelIndex k;
    double theta_over_pi;

    static Pulse x(LevelIndex j, LevelIndex k, double theta_over_pi) {
        return {Axis::X, j, k, theta_over_pi};
    }
    static Pulse y(LevelIndex j, LevelIndex k, double theta_over_pi) {
        return {Axis::Y, j, k, theta_over_pi};
    }

    double theta() const;
    /// Throws InvalidLevels unless j != k, both < dim, and the angle is finite.
    void validate(size_t dim) const;
    std::string str() const;

    bool operator==(const Pulse &other) const = default;
};

/// 2x2 block of a pulse on (j, k), row-major: {jj, jk, kj, kk}.
struct PulseBlock {
    Complex jj, jk, kj, kk;
};
PulseBlock pulse_block(const Pulse &p);

/// Chronological list of pulses: element 0 acts on the state first.
class PulseSequence {
   public:
    explicit PulseSequence(size_t dim = kQuditDim, std::vector<Pulse> pulses = {});

    size_t dim() const {
        return dim_;
    }
    const std::vector<Pulse> &pulses() const {
        return pulses_;
    }
    size_t size() const {
        return pulses_.size();
    }
    bool empty() const {
        return pulses_.empty();
    }
    const Pulse &operator[](size_t i) const {
        return pulses_[i];
    }

    void push_back(const Pulse &p);
    void append(const PulseSequence &other);
    /// Builds a sequence from an operator product written left to right
    /// (rightmost factor acts first), reversing it into chronological order.
    static PulseSequence from_operator_product(std::vector<Pulse> product, size_t dim = kQuditDim);

    size_t count(Axis axis) const;

    bool operator==(const PulseSequence &other) const = default;

   private:
    size_t dim_;
    std::vector<Pulse> pulses_;
};

/// Selects the auxiliary level l used to synthesize a Y rotation from X pulses.
struct LChoice {
    std::optional<LevelIndex> fixed_level;

    static LChoice smallest_available() {
        return {};
    }
    static LChoice fixed(LevelIndex l) {
        return {l};
    }
};

UnitaryMatrix pulse_unitary(const Pulse &p, size_t dim = kQuditDim);

/// m <- U(p) * m, touching only rows j and k.
void left_multiply(CMatrix &m, const Pulse &p);

/// Y_jk(theta) = X_jl(pi) X_kl(theta) X_jl(3 pi) as operators, returned in
/// chronological order [X_jl(3), X_kl(theta), X_jl(1)] (angles in units of pi).
PulseSequence expand_y(const Pulse &p, size_t dim = kQuditDim, LChoice choice = {});

/// Replaces every Y pulse by its three-X expansion. X pulses pass through.
PulseSequence lower_y(const PulseSequence &seq, LChoice choice = {});

UnitaryMatrix evaluate(const PulseSequence &seq);
StateVector apply(const PulseSequence &seq, const StateVector &state);

/// Reversed order, each angle negated.
PulseSequence adjoint(const PulseSequence &seq);

/// Maps an angle (in units of pi) into [0, 4).
double canonical_theta_over_pi(double theta_over_pi);
PulseSequence canonicalize_theta(const PulseSequence &seq);

}  // namespace qudit

#endif
