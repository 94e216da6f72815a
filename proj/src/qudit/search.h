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

#ifndef QUDIT_SEARCH_H
#define QUDIT_SEARCH_H

#include <cstdint>
#include <utility>
#include <vector>

#include "qudit/matrix.h"
#include "qudit/pulse.h"

namespace qudit {

inline constexpr size_t kMaxSearchDepth = 4;

struct SearchSpace {
    size_t dim = kQuditDim;
    std::vector<Axis> axes;
    std::vector<std::pair<LevelIndex, LevelIndex>> level_pairs;
    /// Angles in units of pi, each in (0, 4).
    std::vector<double> theta_grid;
    size_t max_depth = 2;

    /// Every pair j < k of a dim-level system.
    static SearchSpace all_pairs(size_t dim, std::vector<Axis> axes, std::vector<double> theta_grid, size_t max_depth);

    /// Throws EmptySpace or InvalidLevels.
    void validate() const;
};

/// {1/2, 1, 3/2, 2, 5/2, 3, 7/2}.
std::vector<double> half_pi_grid();

struct SearchResult {
    bool found = false;
    PulseSequence sequence;
    /// Residual of the returned sequence, or the best one seen when nothing matched.
    double residual = 0.0;
    Complex phase = 1.0;
    uint64_t candidates_examined = 0;
};

/// Alphabet in a fixed order: X before Y, then pairs lexicographically, then grid order.
std::vector<Pulse> enumerate_pulses(const SearchSpace &space);

/// Breadth-first over depth 0..max_depth. Within a depth, candidates are
/// visited in lexicographic order of their alphabet indices (first pulse
/// most significant), so the first match is the shortest, then the
/// enumeration-order smallest. candidates_examined counts every sequence
/// scored up to and including the match. Work within a depth is spread over
/// `threads` workers (0 picks the hardware count) without affecting the result.
SearchResult brute_force_search(
    const UnitaryMatrix &target,
    const SearchSpace &space,
    double tolerance,
    bool phase_blind = true,
    unsigned threads = 0);

/// Every sequence of exactly `depth` pulses from the alphabet that matches.
std::vector<PulseSequence> all_solutions_at_depth(
    const UnitaryMatrix &target, const SearchSpace &space, size_t depth, double tolerance, bool phase_blind = true);

/// Scores a single candidate with the same residual rules as the search.
SearchResult verify_decomposition(
    const PulseSequence &seq, const UnitaryMatrix &target, double tolerance, bool phase_blind = true);

}  // namespace qudit

#endif
