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

#include "qudit/pulse.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qudit/error.h"

namespace qudit {

namespace {

// cos and sin of (half_turns * pi). Multiples of pi/4 come back exact so
// the catalog gates reproduce their reference entries without 1e-16 dust.
std::pair<double, double> cos_sin_pi(double half_turns) {
    double u = std::fmod(half_turns, 2.0);
    if (u < 0) {
        u += 2.0;
    }
    double quarter = u * 4.0;
    if (quarter == std::floor(quarter)) {
        constexpr double r = std::numbers::sqrt2 / 2.0;
        static constexpr double kCos[8] = {1.0, r, 0.0, -r, -1.0, -r, 0.0, r};
        static constexpr double kSin[8] = {0.0, r, 1.0, r, 0.0, -r, -1.0, -r};
        auto idx = static_cast<int>(quarter) % 8;
        return {kCos[idx], kSin[idx]};
    }
    return {std::cos(u * std::numbers::pi), std::sin(u * std::numbers::pi)};
}

}  // namespace

double Pulse::theta() const {
    return theta_over_pi * std::numbers::pi;
}

void Pulse::validate(size_t dim) const {
    if (j == k) {
        throw QuditError(ErrorKind::InvalidLevels, "pulse " + str() + " couples a level to itself");
    }
    if (j >= dim || k >= dim) {
        throw QuditError(
            ErrorKind::InvalidLevels, "pulse " + str() + " addresses a level outside dimension " + std::to_string(dim));
    }
    if (!std::isfinite(theta_over_pi)) {
        throw QuditError(ErrorKind::InvalidLevels, "pulse angle must be finite");
    }
}

std::string Pulse::str() const {
    std::ostringstream out;
    out << (axis == Axis::X ? "X" : "Y") << "_" << j << k << "(" << theta_over_pi << "pi)";
    return out.str();
}

PulseBlock pulse_block(const Pulse &p) {
    auto [c, s] = cos_sin_pi(p.theta_over_pi / 2.0);
    if (p.axis == Axis::X) {
        return {c, Complex(0, -s), Complex(0, -s), c};
    }
    return {c, -s, s, c};
}

PulseSequence::PulseSequence(size_t dim, std::vector<Pulse> pulses) : dim_(dim), pulses_(std::move(pulses)) {
    if (dim_ == 0) {
        throw QuditError(ErrorKind::DimensionMismatch, "pulse sequence needs a positive dimension");
    }
    for (const auto &p : pulses_) {
        p.validate(dim_);
    }
}

void PulseSequence::push_back(const Pulse &p) {
    p.validate(dim_);
    pulses_.push_back(p);
}

void PulseSequence::append(const PulseSequence &other) {
    if (other.dim_ != dim_) {
        throw QuditError(ErrorKind::DimensionMismatch, "cannot concatenate sequences of different dimension");
    }
    pulses_.insert(pulses_.end(), other.pulses_.begin(), other.pulses_.end());
}

PulseSequence PulseSequence::from_operator_product(std::vector<Pulse> product, size_t dim) {
    return PulseSequence(dim, std::vector<Pulse>(product.rbegin(), product.rend()));
}

size_t PulseSequence::count(Axis axis) const {
    size_t n = 0;
    for (const auto &p : pulses_) {
        n += p.axis == axis;
    }
    return n;
}

UnitaryMatrix pulse_unitary(const Pulse &p, size_t dim) {
    p.validate(dim);
    auto n = static_cast<Eigen::Index>(dim);
    CMatrix m = CMatrix::Identity(n, n);
    auto b = pulse_block(p);
    auto j = static_cast<Eigen::Index>(p.j);
    auto k = static_cast<Eigen::Index>(p.k);
    m(j, j) = b.jj;
    m(j, k) = b.jk;
    m(k, j) = b.kj;
    m(k, k) = b.kk;
    return UnitaryMatrix::trusted(std::move(m));
}

void left_multiply(CMatrix &m, const Pulse &p) {
    auto b = pulse_block(p);
    auto j = static_cast<Eigen::Index>(p.j);
    auto k = static_cast<Eigen::Index>(p.k);
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        Complex vj = m(j, c);
        Complex vk = m(k, c);
        m(j, c) = b.jj * vj + b.jk * vk;
        m(k, c) = b.kj * vj + b.kk * vk;
    }
}

PulseSequence expand_y(const Pulse &p, size_t dim, LChoice choice) {
    p.validate(dim);
    if (p.axis != Axis::Y) {
        throw QuditError(ErrorKind::InvalidLevels, "expand_y called on an X pulse");
    }
    LevelIndex l;
    if (choice.fixed_level.has_value()) {
        l = *choice.fixed_level;
        if (l == p.j || l == p.k || l >= dim) {
            throw QuditError(
                ErrorKind::FixedLevelClash, "auxiliary level " + std::to_string(l) + " is not free for " + p.str());
        }
    } else {
        if (dim < 3) {
            throw QuditError(ErrorKind::NoAncillaAvailable, "a Y rotation needs a third level to synthesize");
        }
        l = 0;
        while (l == p.j || l == p.k) {
            l++;
        }
    }
    return PulseSequence(dim, {Pulse::x(p.j, l, 3.0), Pulse::x(p.k, l, p.theta_over_pi), Pulse::x(p.j, l, 1.0)});
}

PulseSequence lower_y(const PulseSequence &seq, LChoice choice) {
    PulseSequence out(seq.dim());
    for (const auto &p : seq.pulses()) {
        if (p.axis == Axis::Y) {
            out.append(expand_y(p, seq.dim(), choice));
        } else {
            out.push_back(p);
        }
    }
    return out;
}

UnitaryMatrix evaluate(const PulseSequence &seq) {
    auto n = static_cast<Eigen::Index>(seq.dim());
    CMatrix m = CMatrix::Identity(n, n);
    for (const auto &p : seq.pulses()) {
        left_multiply(m, p);
    }
    return UnitaryMatrix::trusted(std::move(m));
}

StateVector apply(const PulseSequence &seq, const StateVector &state) {
    if (state.dim() != seq.dim()) {
        throw QuditError(
            ErrorKind::DimensionMismatch,
            "sequence of dimension " + std::to_string(seq.dim()) + " applied to state of dimension " +
                std::to_string(state.dim()));
    }
    CMatrix column = state.amplitudes();
    for (const auto &p : seq.pulses()) {
        left_multiply(column, p);
    }
    return StateVector(column.col(0));
}

PulseSequence adjoint(const PulseSequence &seq) {
    std::vector<Pulse> out;
    out.reserve(seq.size());
    for (auto it = seq.pulses().rbegin(); it != seq.pulses().rend(); ++it) {
        Pulse p = *it;
        p.theta_over_pi = -p.theta_over_pi;
        out.push_back(p);
    }
    return PulseSequence(seq.dim(), std::move(out));
}

double canonical_theta_over_pi(double theta_over_pi) {
    double t = std::fmod(theta_over_pi, 4.0);
    if (t < 0) {
        t += 4.0;
    }
    if (t >= 4.0 || t == 0.0) {
        t = 0.0;  // also folds -0.0
    }
    return t;
}

PulseSequence canonicalize_theta(const PulseSequence &seq) {
    std::vector<Pulse> out = seq.pulses();
    for (auto &p : out) {
        p.theta_over_pi = canonical_theta_over_pi(p.theta_over_pi);
    }
    return PulseSequence(seq.dim(), std::move(out));
}

}  // namespace qudit
