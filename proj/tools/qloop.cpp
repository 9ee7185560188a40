// Copyright 2026 The qloop developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: compile circuits to optical programs, execute them
// logically or at the event level, sample measurement statistics, verify
// compiled programs, and run the resource arithmetic.  Exit codes: 0 on
// success, 1 on semantic or verification failures, 2 on usage errors.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "qloop/cavity.hpp"
#include "qloop/compiler.hpp"
#include "qloop/errors.hpp"
#include "qloop/event_sim.hpp"
#include "qloop/gates.hpp"
#include "qloop/json_io.hpp"
#include "qloop/oracle.hpp"
#include "qloop/parser.hpp"
#include "qloop/random.hpp"
#include "qloop/resources.hpp"

namespace {

using namespace qloop;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CircuitIR parse_file(const std::string& path) {
    ParseResult result = parse(slurp(path));
    if (!result.ok()) {
        throw ValidationError(path + ": " + result.error->to_string());
    }
    return *result.circuit;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << dump_json(j);
    } else {
        save_json_file(out_path, j);
    }
}

// Logical execution of a circuit that involves a spin or several qudits:
// everything runs inside one JointState, with the spin starting in |+>.
struct JointRun {
    JointState state;
    nlohmann::json events;
};

JointRun run_joint(const CircuitIR& ir, Rng& rng) {
    std::vector<QuditState> inits;
    for (const QuditDecl& q : ir.qudits) {
        inits.push_back(QuditState::basis(q.width, 0));
    }
    for (const Statement& st : ir.statements) {
        if (const auto* p = std::get_if<PrepareStmt>(&st)) {
            inits[ir.qudit_index(p->qudit)] = QuditState::from_amplitudes(p->amplitudes);
        }
    }
    JointRun run{JointState::product(inits, SpinValue::plus), nlohmann::json::array()};

    const auto idx = [&](const std::string& name) {
        return static_cast<std::size_t>(ir.qudit_index(name));
    };
    const auto width = [&](const std::string& name) { return ir.qudit_at(name).width; };

    for (const Statement& st : ir.statements) {
        if (const auto* g = std::get_if<GateStmt>(&st)) {
            run.state = apply_gate(run.state, idx(g->qudit), g->qubit, statement_matrix(*g));
        } else if (const auto* c = std::get_if<CnotStmt>(&st)) {
            run.state = apply_permutation(
                run.state, idx(c->qudit),
                cnot_permutation(width(c->qudit), c->control, c->target));
        } else if (const auto* t = std::get_if<ToffoliStmt>(&st)) {
            run.state = apply_permutation(
                run.state, idx(t->qudit),
                toffoli_permutation(width(t->qudit), t->control_a, t->control_b, t->target));
        } else if (const auto* u = std::get_if<ControlledUStmt>(&st)) {
            run.state = apply_controlled(run.state, idx(u->qudit), u->controls, u->target,
                                         cell_matrix(u->params));
        } else if (const auto* q = std::get_if<QndStmt>(&st)) {
            QndResult r = qnd_measure_qubit(run.state, idx(q->qudit), q->qubit, rng);
            run.state = r.spin.collapsed;
            run.events.push_back({{"kind", "qnd"},
                                  {"qudit", q->qudit},
                                  {"qubit", q->qubit},
                                  {"bit", r.bit},
                                  {"probability", r.spin.probability}});
        } else if (const auto* z = std::get_if<CrossCzStmt>(&st)) {
            CzResult r = cross_qudit_cz(run.state, idx(z->qudit_a), z->qubit_a,
                                        idx(z->qudit_b), z->qubit_b, rng);
            run.state = r.corrected;
            run.events.push_back(
                {{"kind", "cz"},
                 {"qudit_a", z->qudit_a},
                 {"qubit_a", z->qubit_a},
                 {"qudit_b", z->qudit_b},
                 {"qubit_b", z->qubit_b},
                 {"outcome", r.outcome.value == SpinValue::down ? "down" : "up"},
                 {"probability", r.outcome.probability}});
        }
        // prepare was consumed above; measure is sampling-only.
    }
    return run;
}

bool circuit_measures(const CircuitIR& ir) {
    for (const Statement& st : ir.statements) {
        if (std::holds_alternative<MeasureStmt>(st)) {
            return true;
        }
    }
    return false;
}

int cmd_compile(const std::string& in, const std::string& out, bool pack, double bin_period) {
    CircuitIR ir = parse_file(in);
    OpticalProgram prog = compile(ir, bin_period);
    if (pack) {
        prog = pack_passes(prog);
    }
    emit(program_to_json(prog), out);
    return 0;
}

int cmd_run(const std::string& in, const std::string& input_path, const std::string& out,
            std::uint64_t seed) {
    CircuitIR ir = parse_file(in);
    if (ir.single_qudit() && ir.spins.empty()) {
        std::optional<QuditState> input;
        if (!input_path.empty()) {
            input = state_from_json(load_json_file(input_path));
        }
        emit(state_to_json(run_circuit(ir, std::move(input))), out);
        return 0;
    }
    if (!input_path.empty()) {
        throw UnsupportedError("--input applies to single-qudit circuits without a spin");
    }
    Rng rng(seed);
    JointRun run = run_joint(ir, rng);
    nlohmann::json j;
    j["joint_state"] = joint_to_json(run.state);
    j["events"] = std::move(run.events);
    j["seed"] = seed;
    emit(j, out);
    return 0;
}

int cmd_simulate(const std::string& in, const std::string& input_path, const std::string& out,
                 double transmission) {
    OpticalProgram prog = program_from_json(load_json_file(in));
    std::optional<QuditState> input;
    if (!input_path.empty()) {
        input = state_from_json(load_json_file(input_path));
    }
    SimulationResult result =
        simulate_program(prog, std::move(input), LossModel::uniform(transmission));
    nlohmann::json j;
    j["state"] = state_to_json(result.state);
    j["latency"] = latency_to_json(result.latency);
    emit(j, out);
    return 0;
}

int cmd_sample(const std::string& in, std::uint64_t shots, std::uint64_t seed,
               const std::string& out) {
    CircuitIR ir = parse_file(in);
    if (!ir.single_qudit()) {
        throw UnsupportedError("sample handles a single qudit register");
    }
    if (!circuit_measures(ir)) {
        throw ValidationError("circuit has no measure statement to sample");
    }
    SampleHistogram hist;
    hist.num_qubits = ir.qudits[0].width;
    hist.shots = shots;
    hist.seed = seed;
    Rng rng(seed);
    if (ir.spins.empty()) {
        const QuditState state = run_circuit(ir);
        for (std::uint64_t k = 0; k < shots; ++k) {
            ++hist.counts[measure_all(state, rng).outcome];
        }
    } else {
        // Spin outcomes change the post-measurement state, so every shot is
        // a fresh protocol run followed by a bin measurement (marginal over
        // the spin).
        for (std::uint64_t k = 0; k < shots; ++k) {
            const JointRun run = run_joint(ir, rng);
            const double u = rng.uniform();
            const std::uint64_t d = run.state.qudit_dim();
            double acc = 0.0;
            std::uint64_t outcome = d - 1;
            for (std::uint64_t j = 0; j < d; ++j) {
                acc += std::norm(run.state.amp(j, 0)) + std::norm(run.state.amp(j, 1));
                if (u < acc) {
                    outcome = j;
                    break;
                }
            }
            ++hist.counts[outcome];
        }
    }
    emit(histogram_to_json(hist), out);
    return 0;
}

int cmd_verify(const std::string& in, std::uint64_t seed, unsigned num_inputs) {
    CircuitIR ir = parse_file(in);
    if (!ir.single_qudit() || ir.uses_spin_statements()) {
        throw UnsupportedError("verify covers single-qudit gate circuits");
    }
    const unsigned n = ir.qudits[0].width;
    bool failed = false;

    if (n <= oracle::kMaxDenseQubits) {
        Rng rng(seed);
        double max_dev = 0.0;
        for (unsigned k = 0; k < num_inputs; ++k) {
            const QuditState input = random_state(n, rng);
            const QuditState fast = run_circuit(ir, input);
            const QuditState dense = oracle::run_circuit(ir, input);
            max_dev = std::max(max_dev, equal_up_to_global_phase(fast, dense).max_abs_diff);
        }
        std::cout << "oracle cross-check: max deviation " << std::scientific
                  << std::setprecision(3) << max_dev << " over " << num_inputs
                  << " random inputs\n";
        if (max_dev > 1e-10) {
            failed = true;
        }
    } else {
        std::cout << "oracle cross-check: skipped (register wider than "
                  << oracle::kMaxDenseQubits << " qubits)\n";
    }

    const OpticalProgram prog = compile(ir);
    const VerifyReport report = verify(prog, ir, num_inputs, seed);
    std::cout << "event-level check: " << (report.passed ? "passed" : "FAILED")
              << ", max deviation " << std::scientific << std::setprecision(3)
              << report.max_deviation << " over " << report.num_inputs << " inputs\n";
    for (const std::string& diag : report.diagnostics) {
        std::cout << "  " << diag << "\n";
    }
    if (!report.passed) {
        failed = true;
    }
    if (failed) {
        throw ValidationError("verification failed");
    }
    return 0;
}

int cmd_estimate(const ResourceConfig& cfg, const std::string& out) {
    const ResourceReport rep = estimate(cfg);
    std::ostringstream t;
    t << "register width        " << cfg.num_qubits << " qubits\n"
      << "time bins             " << rep.num_bins << "\n"
      << std::scientific << std::setprecision(6)
      << "bin period            " << cfg.bin_period_s << " s\n"
      << "loop period           " << rep.loop_period_s << " s\n"
      << "fiber length          " << rep.fiber_length_m << " m\n"
      << "loop elements         " << rep.elements.total() << " (switches "
      << rep.elements.switches << ", delay lines " << rep.elements.delay_lines
      << ", phase shifters " << rep.elements.phase_shifters << ", beamsplitters "
      << rep.elements.beamsplitters << ")\n"
      << "distinct delays       " << rep.elements.distinct_delay_values << "\n"
      << "elements traversed    " << rep.elements_traversed << "\n"
      << std::setprecision(6)
      << "circuit transmission  " << rep.single_circuit_transmission << "\n"
      << "herald probability    " << rep.herald_probability << "\n"
      << "multi-qudit success   " << rep.multi_qudit_success << " (" << cfg.num_qudits
      << " qudit" << (cfg.num_qudits == 1 ? "" : "s") << ")\n"
      << "switch window         " << (rep.switch_window_ok ? "ok" : "TOO NARROW") << "\n";
    for (const std::string& note : rep.notes) {
        t << "note: " << note << "\n";
    }
    std::cout << t.str();
    if (!out.empty()) {
        save_json_file(out, resources_to_json(rep));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-bin photonic qudit compiler and simulator"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::string input_path;
    bool pack = false;
    double bin_period = 1e-9;
    std::uint64_t seed = 1;
    std::uint64_t shots = 1024;
    unsigned num_inputs = 20;
    double transmission = 1.0;

    auto* compile_cmd = app.add_subcommand("compile", "lower a circuit to an optical program");
    compile_cmd->add_option("circuit", in_path, "circuit source file")->required();
    compile_cmd->add_option("-o,--out", out_path, "program JSON path (default stdout)");
    compile_cmd->add_flag("--pack", pack, "merge compatible gates into shared passes");
    compile_cmd->add_option("--bin-period", bin_period, "bin period in seconds")
        ->check(CLI::PositiveNumber);

    auto* run_cmd = app.add_subcommand("run", "execute a circuit logically");
    run_cmd->add_option("circuit", in_path, "circuit source file")->required();
    run_cmd->add_option("--input", input_path, "input state JSON (overrides prepare)");
    run_cmd->add_option("-o,--out", out_path, "output JSON path (default stdout)");
    run_cmd->add_option("--seed", seed, "random seed for spin outcomes");

    auto* sim_cmd = app.add_subcommand("simulate", "event-level run of a compiled program");
    sim_cmd->add_option("program", in_path, "program JSON file")->required();
    sim_cmd->add_option("--input", input_path, "input state JSON (overrides prep)");
    sim_cmd->add_option("-o,--out", out_path, "output JSON path (default stdout)");
    sim_cmd->add_option("--transmission", transmission, "uniform per-element transmission")
        ->check(CLI::Range(0.0, 1.0));

    auto* sample_cmd = app.add_subcommand("sample", "measurement statistics of a circuit");
    sample_cmd->add_option("circuit", in_path, "circuit source file")->required();
    sample_cmd->add_option("--shots", shots, "number of shots")->required()
        ->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", seed, "random seed");
    sample_cmd->add_option("-o,--out", out_path, "histogram JSON path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "cross-check a circuit end to end");
    verify_cmd->add_option("circuit", in_path, "circuit source file")->required();
    verify_cmd->add_option("--seed", seed, "random seed for test inputs");
    verify_cmd->add_option("--inputs", num_inputs, "number of random inputs")
        ->check(CLI::PositiveNumber);

    ResourceConfig cfg;
    std::string herald_mode = "independent";
    auto* est_cmd = app.add_subcommand("estimate", "loop feasibility arithmetic");
    est_cmd->add_option("-n,--qubits", cfg.num_qubits, "register width")->required();
    est_cmd->add_option("--bin-period", cfg.bin_period_s, "bin period in seconds")
        ->check(CLI::PositiveNumber);
    est_cmd->add_option("--velocity", cfg.group_velocity_mps, "group velocity in m/s")
        ->check(CLI::PositiveNumber);
    est_cmd->add_option("--min-switch-window", cfg.min_switch_window_s,
                        "minimum usable switch window in seconds")
        ->check(CLI::PositiveNumber);
    est_cmd->add_option("--transmission", cfg.per_element_transmission,
                        "per-element transmission")
        ->check(CLI::Range(0.0, 1.0));
    est_cmd->add_option("--photons", cfg.mean_photons, "mean photon number at the source")
        ->check(CLI::NonNegativeNumber);
    est_cmd->add_option("--qudits", cfg.num_qudits, "number of qudit circuits")
        ->check(CLI::PositiveNumber);
    est_cmd->add_option("--herald-mode", herald_mode, "independent | poisson")
        ->check(CLI::IsMember({"independent", "poisson"}));
    est_cmd->add_option("-o,--out", out_path, "also write the report as JSON");

    try {
        app.parse(argc, argv);
        if (compile_cmd->parsed()) {
            return cmd_compile(in_path, out_path, pack, bin_period);
        }
        if (run_cmd->parsed()) {
            return cmd_run(in_path, input_path, out_path, seed);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(in_path, input_path, out_path, transmission);
        }
        if (sample_cmd->parsed()) {
            return cmd_sample(in_path, shots, seed, out_path);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(in_path, seed, num_inputs);
        }
        if (est_cmd->parsed()) {
            cfg.herald_model =
                herald_mode == "poisson" ? HeraldModel::poisson : HeraldModel::independent;
            return cmd_estimate(cfg, out_path);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const qloop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
