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

#ifndef QUDIT_DEUTSCH_H
#define QUDIT_DEUTSCH_H

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qudit/gates.h"
#include "qudit/matrix.h"
#include "qudit/oracle.h"
#include "qudit/pulse.h"

namespace qudit {

enum class StageRole { Preparation, Transform, Oracle };

struct DeutschStage {
    std::string name;
    StageRole role;
    PulseSequence sequence;
};

/// Y_01(pi) preparation, H_AB, the oracle U_j, then H_A.
std::vector<DeutschStage> deutsch_stages(int oracle_id);

/// Two-outcome readout: is the level above |1> or not.
struct Readout {
    Verdict verdict;
    double p_low;
    double p_high;
};

/// p_low = |a0|^2 + |a1|^2, p_high = the rest; Constant iff p_low > 1/2.
/// Throws NotNormalized, DimensionMismatch, or AmbiguousReadout on a near tie.
Readout coarse_measure(const StateVector &state);

struct DeutschResult {
    int oracle_id;
    StateVector final_state;
    std::vector<double> level_populations;
    Verdict verdict;
    double p_low;
    double p_high;
    int oracle_queries;
    size_t pulse_count;
    /// Phase c with c * final_state closest to the expected output state.
    Complex recovered_phase;
    double residual_vs_expected;
};

/// Called after every stage with the state it produced.
using StageObserver = std::function<void(const DeutschStage &, const StateVector &)>;

DeutschResult run_deutsch(int oracle_id, const StageObserver &observer = {});

/// The output states i/sqrt2 (|0>-|1>), i/sqrt2 (|1>-|0>), i/sqrt2 (|2>-|3>), i/sqrt2 (|3>-|2>).
StateVector expected_final_state(int oracle_id);

/// Plain two-qubit simulation of (H (x) I) U_j (H (x) H) (I (x) X) |00>, written
/// against std::array with no use of the pulse machinery. Amplitudes are in
/// the |a b> order, index 2a + b.
std::array<std::complex<double>, 4> two_qubit_reference_run(int oracle_id);

}  // namespace qudit

#endif
