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

#include "qudit/json_io.h"

#include <string>

#include "qudit/error.h"

namespace qudit {

namespace {

[[noreturn]] void bad(const std::string &what) {
    throw QuditError(ErrorKind::BadFormat, what);
}

size_t read_dim(const Json &j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
        bad("expected an object with an integer \"dim\"");
    }
    auto dim = j["dim"].get<int64_t>();
    if (dim <= 0) {
        bad("\"dim\" must be positive");
    }
    return static_cast<size_t>(dim);
}

std::vector<double> read_row(const Json &row, size_t n, const char *field) {
    if (!row.is_array() || row.size() != n) {
        bad(std::string("\"") + field + "\" row must hold " + std::to_string(n) + " numbers");
    }
    std::vector<double> out;
    for (const auto &v : row) {
        if (!v.is_number()) {
            bad(std::string("\"") + field + "\" entries must be numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

Json matrix_to_json(const CMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json rr = Json::array();
        Json ii = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            rr.push_back(m(r, c).real());
            ii.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

CMatrix matrix_from_json(const Json &j) {
    size_t n = read_dim(j);
    if (!j.contains("re") || !j["re"].is_array() || j["re"].size() != n) {
        bad("\"re\" must be an array of " + std::to_string(n) + " rows");
    }
    bool has_im = j.contains("im");
    if (has_im && (!j["im"].is_array() || j["im"].size() != n)) {
        bad("\"im\" must be an array of " + std::to_string(n) + " rows");
    }
    auto sz = static_cast<Eigen::Index>(n);
    CMatrix m = CMatrix::Zero(sz, sz);
    for (size_t r = 0; r < n; r++) {
        auto re = read_row(j["re"][r], n, "re");
        auto im = has_im ? read_row(j["im"][r], n, "im") : std::vector<double>(n, 0.0);
        for (size_t c = 0; c < n; c++) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(re[c], im[c]);
        }
    }
    return m;
}

Json state_to_json(const StateVector &s) {
    Json re = Json::array();
    Json im = Json::array();
    for (size_t i = 0; i < s.dim(); i++) {
        re.push_back(s[i].real());
        im.push_back(s[i].imag());
    }
    return {{"dim", s.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

StateVector state_from_json(const Json &j) {
    size_t n = read_dim(j);
    if (!j.contains("re")) {
        bad("state needs \"re\"");
    }
    auto re = read_row(j["re"], n, "re");
    auto im = j.contains("im") ? read_row(j["im"], n, "im") : std::vector<double>(n, 0.0);
    CVector v(static_cast<Eigen::Index>(n));
    for (size_t i = 0; i < n; i++) {
        v(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
    }
    return StateVector(std::move(v));
}

Json schedule_to_json(const PulseSequence &seq) {
    Json pulses = Json::array();
    PulseSequence canonical = canonicalize_theta(seq);
    for (const auto &p : canonical.pulses()) {
        pulses.push_back({
            {"axis", p.axis == Axis::X ? "x" : "y"},
            {"levels", {p.j, p.k}},
            {"theta_over_pi", p.theta_over_pi},
        });
    }
    return {{"dim", seq.dim()}, {"pulses", std::move(pulses)}};
}

PulseSequence schedule_from_json(const Json &j) {
    size_t dim = read_dim(j);
    if (!j.contains("pulses") || !j["pulses"].is_array()) {
        bad("schedule needs a \"pulses\" array");
    }
    PulseSequence seq(dim);
    for (const auto &entry : j["pulses"]) {
        if (!entry.is_object() || !entry.contains("axis") || !entry.contains("levels") ||
            !entry.contains("theta_over_pi")) {
            bad("each pulse needs \"axis\", \"levels\" and \"theta_over_pi\"");
        }
        const auto &axis = entry["axis"];
        if (!axis.is_string() || (axis != "x" && axis != "y")) {
            bad("pulse axis must be \"x\" or \"y\"");
        }
        const auto &levels = entry["levels"];
        if (!levels.is_array() || levels.size() != 2 || !levels[0].is_number_unsigned() ||
            !levels[1].is_number_unsigned()) {
            bad("pulse levels must be two unsigned integers");
        }
        if (!entry["theta_over_pi"].is_number()) {
            bad("theta_over_pi must be a number");
        }
        seq.push_back({
            axis == "x" ? Axis::X : Axis::Y,
            levels[0].get<LevelIndex>(),
            levels[1].get<LevelIndex>(),
            entry["theta_over_pi"].get<double>(),
        });
    }
    return seq;
}

Json complex_to_json(Complex c) {
    return {{"re", c.real()}, {"im", c.imag()}};
}

Json verification_to_json(const VerificationReport &r) {
    return {
        {"name", r.name},
        {"residual_exact", r.residual_exact},
        {"residual_phase_aligned", r.residual_phase_aligned},
        {"residual_logical", r.residual_logical},
        {"recovered_phase", complex_to_json(r.recovered_phase)},
        {"pass", r.pass},
    };
}

Json gate_to_json(const GateSpec &spec, const VerificationReport &r) {
    return {
        {"name", spec.name},
        {"schedule", schedule_to_json(spec.sequence)},
        {"reference", matrix_to_json(spec.reference.matrix())},
        {"verification", verification_to_json(r)},
    };
}

Json deutsch_to_json(const DeutschResult &r) {
    return {
        {"oracle", r.oracle_id},
        {"verdict", verdict_name(r.verdict)},
        {"p_low", r.p_low},
        {"p_high", r.p_high},
        {"final_state", state_to_json(r.final_state)},
        {"level_populations", r.level_populations},
        {"recovered_phase_vs_eq19", complex_to_json(r.recovered_phase)},
        {"residual_vs_expected", r.residual_vs_expected},
        {"oracle_queries", r.oracle_queries},
        {"pulse_count", r.pulse_count},
    };
}

Json search_result_to_json(const SearchResult &r) {
    return {
        {"found", r.found},
        {"sequence", schedule_to_json(r.sequence)},
        {"residual", r.residual},
        {"phase", complex_to_json(r.phase)},
        {"candidates_examined", r.candidates_examined},
    };
}

}  // namespace qudit
