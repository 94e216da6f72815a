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

#include "qudit/search.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "qudit/error.h"

namespace qudit {

namespace {

struct Score {
    double residual;
    Complex phase;
};

Score score(const CMatrix &product, const CMatrix &target, bool phase_blind) {
    if (phase_blind) {
        auto a = global_phase_distance(product, target);
        return {a.residual, a.phase};
    }
    return {max_abs_diff(product, target), 1.0};
}

uint64_t ipow(uint64_t base, size_t exp) {
    uint64_t out = 1;
    for (size_t i = 0; i < exp; i++) {
        out *= base;
    }
    return out;
}

struct SubtreeOutcome {
    // Offset of the first hit inside the subtree, in enumeration order.
    std::optional<uint64_t> hit;
    std::vector<size_t> hit_indices;
    Score hit_score{0.0, 1.0};
    Score best{std::numeric_limits<double>::infinity(), 1.0};
    std::vector<size_t> best_indices;
};

// Depth-first walk over all suffixes of length `depth - 1` below a fixed first
// pulse, keeping one prefix product per level.
SubtreeOutcome scan_subtree(
    size_t first,
    size_t depth,
    const std::vector<Pulse> &alphabet,
    const CMatrix &target,
    double tolerance,
    bool phase_blind) {
    SubtreeOutcome out;
    const size_t n = alphabet.size();
    std::vector<CMatrix> prefix(depth + 1);
    prefix[0] = CMatrix::Identity(target.rows(), target.cols());
    std::vector<size_t> idx(depth, 0);
    idx[0] = first;
    prefix[1] = prefix[0];
    left_multiply(prefix[1], alphabet[first]);

    size_t level = 1;
    if (depth == 1) {
        Score s = score(prefix[1], target, phase_blind);
        out.best = s;
        out.best_indices = idx;
        if (s.residual <= tolerance) {
            out.hit = 0;
            out.hit_indices = idx;
            out.hit_score = s;
        }
        return out;
    }

    uint64_t offset = 0;
    idx[1] = 0;
    while (true) {
        prefix[level + 1] = prefix[level];
        left_multiply(prefix[level + 1], alphabet[idx[level]]);
        if (level + 1 < depth) {
            level++;
            idx[level] = 0;
            continue;
        }
        Score s = score(prefix[depth], target, phase_blind);
        if (s.residual < out.best.residual) {
            out.best = s;
            out.best_indices = idx;
        }
        if (s.residual <= tolerance) {
            out.hit = offset;
            out.hit_indices = idx;
            out.hit_score = s;
            return out;
        }
        offset++;
        // Advance the odometer over levels 1..depth-1.
        while (level >= 1 && ++idx[level] == n) {
            level--;
        }
        if (level == 0) {
            return out;
        }
    }
}

PulseSequence sequence_from(const std::vector<size_t> &indices, const std::vector<Pulse> &alphabet, size_t dim) {
    std::vector<Pulse> pulses;
    pulses.reserve(indices.size());
    for (auto i : indices) {
        pulses.push_back(alphabet[i]);
    }
    return PulseSequence(dim, std::move(pulses));
}

}  // namespace

SearchSpace SearchSpace::all_pairs(size_t dim, std::vector<Axis> axes, std::vector<double> theta_grid, size_t max_depth) {
    SearchSpace s;
    s.dim = dim;
    s.axes = std::move(axes);
    s.theta_grid = std::move(theta_grid);
    s.max_depth = max_depth;
    for (LevelIndex j = 0; j < dim; j++) {
        for (LevelIndex k = j + 1; k < dim; k++) {
            s.level_pairs.emplace_back(j, k);
        }
    }
    return s;
}

void SearchSpace::validate() const {
    if (axes.empty() || level_pairs.empty() || theta_grid.empty()) {
        throw QuditError(ErrorKind::EmptySpace, "search space needs at least one axis, pair and angle");
    }
    if (max_depth == 0 || max_depth > kMaxSearchDepth) {
        throw QuditError(ErrorKind::OutOfRange, "search depth must be in 1..4");
    }
    for (auto [j, k] : level_pairs) {
        Pulse::x(j, k, 1.0).validate(dim);
    }
    for (double t : theta_grid) {
        if (!(t > 0.0 && t < 4.0)) {
            throw QuditError(ErrorKind::OutOfRange, "grid angles must lie strictly between 0 and 4 pi");
        }
    }
}

std::vector<double> half_pi_grid() {
    return {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5};
}

std::vector<Pulse> enumerate_pulses(const SearchSpace &space) {
    space.validate();
    auto pairs = space.level_pairs;
    std::sort(pairs.begin(), pairs.end());
    std::vector<Pulse> out;
    for (Axis axis : {Axis::X, Axis::Y}) {
        if (std::find(space.axes.begin(), space.axes.end(), axis) == space.axes.end()) {
            continue;
        }
        for (auto [j, k] : pairs) {
            for (double t : space.theta_grid) {
                out.push_back({axis, j, k, t});
            }
        }
    }
    return out;
}

SearchResult brute_force_search(
    const UnitaryMatrix &target, const SearchSpace &space, double tolerance, bool phase_blind, unsigned threads) {
    if (target.dim() != space.dim) {
        throw QuditError(ErrorKind::DimensionMismatch, "target and search space dimensions differ");
    }
    const auto alphabet = enumerate_pulses(space);
    const CMatrix &goal = target.matrix();
    const size_t n = alphabet.size();

    SearchResult result{false, PulseSequence(space.dim), 0.0, 1.0, 0};
    auto id = CMatrix::Identity(goal.rows(), goal.cols());
    Score s0 = score(id, goal, phase_blind);
    result.candidates_examined = 1;
    result.residual = s0.residual;
    result.phase = s0.phase;
    if (s0.residual <= tolerance) {
        result.found = true;
        return result;
    }
    std::vector<size_t> best_indices;

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }

    for (size_t depth = 1; depth <= space.max_depth; depth++) {
        std::vector<SubtreeOutcome> outcomes(n);
        std::atomic<size_t> next{0};
        std::atomic<size_t> earliest_hit{n};
        auto worker = [&] {
            while (true) {
                size_t first = next.fetch_add(1);
                if (first >= n || first > earliest_hit.load()) {
                    return;
                }
                outcomes[first] = scan_subtree(first, depth, alphabet, goal, tolerance, phase_blind);
                if (outcomes[first].hit) {
                    size_t cur = earliest_hit.load();
                    while (first < cur && !earliest_hit.compare_exchange_weak(cur, first)) {
                    }
                }
            }
        };
        unsigned workers = depth == 1 ? 1u : std::min<unsigned>(threads, static_cast<unsigned>(n));
        if (workers <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; w++) {
                pool.emplace_back(worker);
            }
            for (auto &t : pool) {
                t.join();
            }
        }

        const uint64_t subtree_size = ipow(n, depth - 1);
        size_t hit_first = earliest_hit.load();
        // Subtrees past the earliest hit may have been skipped; only earlier ones feed the best-seen residual.
        size_t scanned_until = hit_first < n ? hit_first + 1 : n;
        for (size_t first = 0; first < scanned_until; first++) {
            const auto &o = outcomes[first];
            if (o.best.residual < result.residual) {
                result.residual = o.best.residual;
                result.phase = o.best.phase;
                best_indices = o.best_indices;
            }
        }
        if (hit_first < n) {
            const auto &o = outcomes[hit_first];
            result.found = true;
            result.sequence = sequence_from(o.hit_indices, alphabet, space.dim);
            result.residual = o.hit_score.residual;
            result.phase = o.hit_score.phase;
            result.candidates_examined += hit_first * subtree_size + *o.hit + 1;
            return result;
        }
        result.candidates_examined += n * subtree_size;
    }
    if (!best_indices.empty()) {
        result.sequence = sequence_from(best_indices, alphabet, space.dim);
    }
    return result;
}

std::vector<PulseSequence> all_solutions_at_depth(
    const UnitaryMatrix &target, const SearchSpace &space, size_t depth, double tolerance, bool phase_blind) {
    if (target.dim() != space.dim) {
        throw QuditError(ErrorKind::DimensionMismatch, "target and search space dimensions differ");
    }
    if (depth > kMaxSearchDepth) {
        throw QuditError(ErrorKind::OutOfRange, "search depth must be at most 4");
    }
    const auto alphabet = enumerate_pulses(space);
    const size_t n = alphabet.size();
    std::vector<PulseSequence> out;
    std::vector<size_t> idx(depth, 0);
    while (true) {
        CMatrix m = CMatrix::Identity(target.matrix().rows(), target.matrix().cols());
        for (auto i : idx) {
            left_multiply(m, alphabet[i]);
        }
        if (score(m, target.matrix(), phase_blind).residual <= tolerance) {
            out.push_back(sequence_from(idx, alphabet, space.dim));
        }
        size_t pos = depth;
        while (pos > 0 && ++idx[pos - 1] == n) {
            idx[pos - 1] = 0;
            pos--;
        }
        if (pos == 0) {
            return out;
        }
    }
}

SearchResult verify_decomposition(
    const PulseSequence &seq, const UnitaryMatrix &target, double tolerance, bool phase_blind) {
    if (seq.dim() != target.dim()) {
        throw QuditError(ErrorKind::DimensionMismatch, "sequence and target dimensions differ");
    }
    Score s = score(evaluate(seq).matrix(), target.matrix(), phase_blind);
    return {s.residual <= tolerance, seq, s.residual, s.phase, 1};
}

}  // namespace qudit
