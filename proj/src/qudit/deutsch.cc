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

#include "qudit/deutsch.h"

#include <cmath>
#include <numbers>

#include "qudit/error.h"
#include "qudit/levels.h"

namespace qudit {

std::vector<DeutschStage> deutsch_stages(int oracle_id) {
    GateSpec oracle = oracle_sequence(oracle_id);
    return {
        {"PREP_Y01", StageRole::Preparation, PulseSequence(kQuditDim, {Pulse::y(0, 1, 1.0)})},
        {"H_AB", StageRole::Transform, hadamard_both_sequence().sequence},
        {oracle.name, StageRole::Oracle, oracle.sequence},
        {"H_A", StageRole::Transform, hadamard_sequence(Subsystem::A).sequence},
    };
}

Readout coarse_measure(const StateVector &state) {
    if (state.dim() != kQuditDim) {
        throw QuditError(ErrorKind::DimensionMismatch, "coarse readout is defined on the five-level system");
    }
    if (!state.is_normalized()) {
        throw QuditError(ErrorKind::NotNormalized, "readout needs a normalized state");
    }
    auto pops = state.populations();
    double p_low = pops[0] + pops[1];
    double p_high = pops[2] + pops[3] + pops[4];
    if (std::abs(p_low - 0.5) <= tol::kPhysics) {
        throw QuditError(ErrorKind::AmbiguousReadout, "low and high populations tie at 1/2");
    }
    return {p_low > 0.5 ? Verdict::Constant : Verdict::Balanced, p_low, p_high};
}

StateVector expected_final_state(int oracle_id) {
    boolean_oracle(oracle_id);
    const Complex amp{0.0, std::numbers::sqrt2 / 2.0};
    CVector v = CVector::Zero(static_cast<Eigen::Index>(kQuditDim));
    // Balanced oracles land on levels 2, 3; constant ones on 0, 1. Even ids flip the sign.
    Eigen::Index base = oracle_id <= 2 ? 0 : 2;
    double sign = oracle_id % 2 == 1 ? 1.0 : -1.0;
    v(base) = sign * amp;
    v(base + 1) = -sign * amp;
    return StateVector(std::move(v));
}

DeutschResult run_deutsch(int oracle_id, const StageObserver &observer) {
    auto stages = deutsch_stages(oracle_id);
    StateVector state = StateVector::basis(kQuditDim, 0);
    int queries = 0;
    size_t pulses = 0;
    for (const auto &stage : stages) {
        state = apply(stage.sequence, state);
        pulses += stage.sequence.size();
        if (stage.role == StageRole::Oracle) {
            queries++;
        }
        if (observer) {
            observer(stage, state);
        }
    }

    Readout readout = coarse_measure(state);
    auto match = global_phase_distance(state, expected_final_state(oracle_id));
    return {
        oracle_id,
        state,
        state.populations(),
        readout.verdict,
        readout.p_low,
        readout.p_high,
        queries,
        pulses,
        match.phase,
        match.residual,
    };
}

}  // namespace qudit
