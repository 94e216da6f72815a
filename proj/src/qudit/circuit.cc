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

#include "qudit/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "qudit/error.h"
#include "qudit/gates.h"

namespace qudit {

namespace {

struct Token {
    std::string_view text;
    size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        if (i >= line.size()) {
            break;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

LevelIndex parse_level(const Token &tok, size_t line_no) {
    unsigned long value = 0;
    auto [end, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || end != tok.text.data() + tok.text.size()) {
        throw ParseError(
            ErrorKind::SyntaxError, line_no, tok.column, "expected a level index, got '" + std::string(tok.text) + "'");
    }
    if (value >= kQuditDim) {
        throw ParseError(
            ErrorKind::BadLevelIndex, line_no, tok.column, "level " + std::string(tok.text) + " out of range for d=5");
    }
    return static_cast<LevelIndex>(value);
}

double parse_angle(const Token &tok, size_t line_no) {
    double value = 0;
    const char *first = tok.text.data();
    const char *last = first + tok.text.size();
    if (first != last && *first == '+') {
        first++;
    }
    auto [end, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || end != last || !std::isfinite(value)) {
        throw ParseError(
            ErrorKind::SyntaxError,
            line_no,
            tok.column,
            "expected an angle as a decimal multiple of pi, got '" + std::string(tok.text) + "'");
    }
    return value;
}

std::string format_angle(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, end);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

}  // namespace

const std::vector<std::string> &named_gate_keywords() {
    static const std::vector<std::string> kNames = {
        "H_A", "H_B", "H_AB", "T_A", "T_B", "CNOT_AB", "CNOT_BA", "ORACLE_1", "ORACLE_2", "ORACLE_3", "ORACLE_4"};
    return kNames;
}

CircuitProgram parse_circuit(std::string_view text) {
    CircuitProgram program;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        line_no++;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const Token &head = tokens[0];
        if (head.text == "RX" || head.text == "RY") {
            if (tokens.size() != 4) {
                size_t col = tokens.size() < 4 ? line.size() + 1 : tokens[4].column;
                throw ParseError(
                    ErrorKind::SyntaxError, line_no, col, std::string(head.text) + " takes exactly three arguments: j k theta");
            }
            LevelIndex j = parse_level(tokens[1], line_no);
            LevelIndex k = parse_level(tokens[2], line_no);
            if (j == k) {
                throw ParseError(ErrorKind::BadLevelIndex, line_no, tokens[2].column, "a pulse needs two distinct levels");
            }
            double t = parse_angle(tokens[3], line_no);
            Axis axis = head.text == "RX" ? Axis::X : Axis::Y;
            program.statements.emplace_back(RawPulse{{axis, j, k, t}});
            continue;
        }
        const auto &names = named_gate_keywords();
        if (std::find(names.begin(), names.end(), head.text) == names.end()) {
            throw ParseError(ErrorKind::UnknownGate, line_no, head.column, "unknown gate '" + std::string(head.text) + "'");
        }
        if (tokens.size() != 1) {
            throw ParseError(
                ErrorKind::SyntaxError, line_no, tokens[1].column, "named gate " + std::string(head.text) + " takes no arguments");
        }
        program.statements.emplace_back(NamedGate{std::string(head.text)});
    }
    return program;
}

std::string print_circuit(const CircuitProgram &program) {
    std::string out;
    for (const auto &st : program.statements) {
        if (const auto *g = std::get_if<NamedGate>(&st)) {
            out += g->name;
        } else {
            const auto &p = std::get<RawPulse>(st).pulse;
            out += p.axis == Axis::X ? "RX " : "RY ";
            out += std::to_string(p.j) + " " + std::to_string(p.k) + " " + format_angle(p.theta_over_pi);
        }
        out += '\n';
    }
    return out;
}

PulseSequence compile(const CircuitProgram &program, bool lower_y_pulses) {
    PulseSequence seq(kQuditDim);
    for (const auto &st : program.statements) {
        if (const auto *g = std::get_if<NamedGate>(&st)) {
            seq.append(gate_by_name(g->name).sequence);
        } else {
            seq.push_back(std::get<RawPulse>(st).pulse);
        }
    }
    seq = canonicalize_theta(seq);
    if (lower_y_pulses) {
        seq = lower_y(seq);
    }
    return seq;
}

CircuitProgram concat(const CircuitProgram &a, const CircuitProgram &b) {
    CircuitProgram out = a;
    out.statements.insert(out.statements.end(), b.statements.begin(), b.statements.end());
    return out;
}

}  // namespace qudit
