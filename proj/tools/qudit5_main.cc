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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qudit/circuit.h"
#include "qudit/deutsch.h"
#include "qudit/error.h"
#include "qudit/gates.h"
#include "qudit/json_io.h"
#include "qudit/search.h"

using namespace qudit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw QuditError(ErrorKind::BadFormat, "cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size()) {
            throw QuditError(ErrorKind::BadFormat, "bad grid entry '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

void print_json(const Json &j) {
    std::cout << j.dump(2) << "\n";
}

int cmd_verify_gates(double tolerance) {
    Json out = Json::array();
    bool all_pass = true;
    std::fprintf(stderr, "%-8s %12s %12s %12s %22s %s\n", "gate", "exact", "aligned", "logical", "phase", "status");
    for (const auto &spec : gate_catalog()) {
        auto report = verify_gate(spec, tolerance);
        all_pass &= report.pass;
        std::fprintf(
            stderr,
            "%-8s %12.3e %12.3e %12.3e %10.6f%+10.6fi  %s\n",
            spec.name.c_str(),
            report.residual_exact,
            report.residual_phase_aligned,
            report.residual_logical,
            report.recovered_phase.real(),
            report.recovered_phase.imag(),
            report.pass ? "ok" : "FAIL");
        out.push_back(gate_to_json(spec, report));
    }
    print_json(out);
    return all_pass ? kExitOk : kExitFailed;
}

int cmd_run_deutsch(int oracle, bool json_only) {
    auto result = run_deutsch(oracle);
    if (!json_only) {
        std::fprintf(
            stderr,
            "oracle f_%d: verdict %s (p_low=%.6f, p_high=%.6f, %zu pulses, %d oracle query)\n",
            oracle,
            verdict_name(result.verdict),
            result.p_low,
            result.p_high,
            result.pulse_count,
            result.oracle_queries);
    }
    print_json(deutsch_to_json(result));
    return kExitOk;
}

int cmd_compile(const std::string &path, bool lower, const std::string &emit) {
    auto program = parse_circuit(read_file(path));
    auto schedule = compile(program, lower);

    Json gates = Json::array();
    for (const auto &st : program.statements) {
        if (const auto *g = std::get_if<NamedGate>(&st)) {
            gates.push_back(verification_to_json(verify_gate(gate_by_name(g->name))));
        }
    }
    Json report = {
        {"program", print_circuit(program)},
        {"schedule", schedule_to_json(schedule)},
        {"pulse_count", schedule.size()},
        {"final_state", state_to_json(apply(schedule, StateVector::basis(kQuditDim, 0)))},
        {"gates", std::move(gates)},
    };
    if (!emit.empty()) {
        std::ofstream out(emit);
        if (!out) {
            throw QuditError(ErrorKind::BadFormat, "cannot write " + emit);
        }
        out << schedule_to_json(schedule).dump(2) << "\n";
    }
    print_json(report);
    return kExitOk;
}

int cmd_apply(const std::string &path, size_t input, bool lower) {
    auto schedule = compile(parse_circuit(read_file(path)), lower);
    print_json(state_to_json(apply(schedule, StateVector::basis(kQuditDim, input))));
    return kExitOk;
}

int cmd_search(
    const std::string &target_path,
    size_t depth,
    const std::string &grid,
    const std::string &axes,
    bool exact_phase,
    double tolerance,
    unsigned threads) {
    UnitaryMatrix target(matrix_from_json(Json::parse(read_file(target_path))));
    std::vector<Axis> axis_list;
    for (char c : axes) {
        if (c == 'x' || c == 'X') {
            axis_list.push_back(Axis::X);
        } else if (c == 'y' || c == 'Y') {
            axis_list.push_back(Axis::Y);
        } else {
            throw QuditError(ErrorKind::BadFormat, "axes must be drawn from 'x' and 'y'");
        }
    }
    auto space = SearchSpace::all_pairs(target.dim(), axis_list, grid.empty() ? half_pi_grid() : parse_grid(grid), depth);
    auto result = brute_force_search(target, space, tolerance, !exact_phase, threads);
    std::fprintf(
        stderr,
        "%s after %llu candidates (residual %.3e)\n",
        result.found ? "found" : "not found",
        static_cast<unsigned long long>(result.candidates_examined),
        result.residual);
    print_json(search_result_to_json(result));
    return result.found ? kExitOk : kExitFailed;
}

int cmd_dump_gate(const std::string &name) {
    print_json(matrix_to_json(gate_by_name(name).reference.matrix()));
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Five-level qudit pulse simulator for two-qubit algorithms"};
    app.require_subcommand(1);

    double tol = tol::kPhysics;
    auto *verify = app.add_subcommand("verify-gates", "Verify every catalog gate against its reference matrix");
    verify->add_option("--tol", tol, "Phase-aligned residual tolerance");

    int oracle = 0;
    bool json_only = false;
    auto *deutsch = app.add_subcommand("run-deutsch", "Run the Deutsch algorithm for one oracle");
    deutsch->add_option("--oracle", oracle, "Oracle id 1..4")->required()->check(CLI::Range(1, 4));
    deutsch->add_flag("--json", json_only, "Suppress the human summary on stderr");

    std::string circuit_path;
    bool lower = false;
    std::string emit;
    auto *comp = app.add_subcommand("compile", "Compile a circuit file to a pulse schedule");
    comp->add_option("file", circuit_path, "Circuit file")->required();
    comp->add_flag("--lower-y", lower, "Lower Y pulses to X-only form");
    comp->add_option("--emit", emit, "Also write the schedule JSON to this path");

    size_t input = 0;
    auto *app_cmd = app.add_subcommand("apply", "Apply a circuit to a basis state");
    app_cmd->add_option("file", circuit_path, "Circuit file")->required();
    app_cmd->add_option("--input", input, "Basis level 0..4")->required()->check(CLI::Range(0, 4));
    app_cmd->add_flag("--lower-y", lower, "Lower Y pulses before applying");

    std::string target;
    size_t depth = 2;
    std::string grid;
    std::string axes = "xy";
    bool exact_phase = false;
    double search_tol = tol::kPhysics;
    unsigned threads = 0;
    auto *search = app.add_subcommand("search", "Brute-force a pulse decomposition of a target matrix");
    search->add_option("--target", target, "Matrix JSON file")->required();
    search->add_option("--depth", depth, "Maximum sequence length 1..4")->check(CLI::Range(1, 4));
    search->add_option("--grid", grid, "Comma-separated angles in units of pi (default 0.5,1,...,3.5)");
    search->add_option("--axes", axes, "Axes to draw from, e.g. xy");
    search->add_flag("--exact-phase", exact_phase, "Require an exact match, no global phase freedom");
    search->add_option("--tol", search_tol, "Residual tolerance");
    search->add_option("--threads", threads, "Worker threads (0 = hardware count)");

    std::string gate_name;
    auto *dump = app.add_subcommand("dump-gate", "Print a catalog gate's reference matrix as JSON");
    dump->add_option("name", gate_name, "Gate name, e.g. CNOT_AB")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            return cmd_verify_gates(tol);
        }
        if (*deutsch) {
            return cmd_run_deutsch(oracle, json_only);
        }
        if (*comp) {
            return cmd_compile(circuit_path, lower, emit);
        }
        if (*app_cmd) {
            return cmd_apply(circuit_path, input, lower);
        }
        if (*search) {
            return cmd_search(target, depth, grid, axes, exact_phase, search_tol, threads);
        }
        if (*dump) {
            return cmd_dump_gate(gate_name);
        }
    } catch (const QuditError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception &e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
