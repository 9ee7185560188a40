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

#include "qloop/json_io.hpp"

#include <fstream>
#include <utility>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

using nlohmann::json;

// Every accessor funnels through here so malformed documents surface as one
// error type with the JSON library's diagnostic attached.
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed ") + what + " document: " + e.what());
    }
}

json amps_to_json(const std::vector<Complex>& amps) {
    json arr = json::array();
    for (const Complex& a : amps) {
        arr.push_back(json::array({a.real(), a.imag()}));
    }
    return arr;
}

std::vector<Complex> amps_from_json(const json& arr) {
    if (!arr.is_array()) {
        throw ValidationError("amplitudes must be an array of [re, im] pairs");
    }
    std::vector<Complex> amps;
    amps.reserve(arr.size());
    for (const json& pair : arr) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ValidationError("amplitudes must be an array of [re, im] pairs");
        }
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return amps;
}

json block_to_json(const PassBlock& block) {
    json b;
    b["kind"] = block.id.kind == BlockKind::single_qubit ? "single_qubit" : "cnot_target";
    b["qubit"] = block.id.qubit;
    b["active"] = block.active();
    if (block.active()) {
        const BlockSchedule& s = *block.schedule;
        b["delays_in_T"] = s.delays_in_T;
        json routing = json::array();
        for (std::size_t bin = 0; bin < s.routing.size(); ++bin) {
            routing.push_back(json::array({bin, s.routing[bin]}));
        }
        b["routing"] = std::move(routing);
        if (s.mzi) {
            b["mzi"] = {{"theta", s.mzi->theta},
                        {"phi", s.mzi->phi},
                        {"psi0", s.mzi->psi0},
                        {"psi1", s.mzi->psi1}};
        } else {
            b["mzi"] = nullptr;
        }
        b["common_latency_in_T"] = s.common_latency_in_T;
        b["support"] = s.support;
    }
    return b;
}

PassBlock block_from_json(const json& b, unsigned num_qubits) {
    PassBlock block;
    const std::string kind = b.at("kind").get<std::string>();
    if (kind == "single_qubit") {
        block.id.kind = BlockKind::single_qubit;
    } else if (kind == "cnot_target") {
        block.id.kind = BlockKind::cnot_target;
    } else {
        throw ValidationError("unknown block kind '" + kind + "'");
    }
    block.id.qubit = b.at("qubit").get<unsigned>();
    if (block.id.qubit >= num_qubits) {
        throw ValidationError("block qubit index exceeds the register width");
    }
    if (!b.at("active").get<bool>()) {
        return block;
    }
    BlockSchedule s;
    s.kind = block.id.kind;
    s.qubit = block.id.qubit;
    s.delays_in_T = b.at("delays_in_T").get<std::vector<std::int64_t>>();
    const std::size_t expected_delays = s.kind == BlockKind::single_qubit ? 4 : 3;
    if (s.delays_in_T.size() != expected_delays) {
        throw ValidationError("block delay list has the wrong length");
    }
    const std::uint64_t bins = dim(num_qubits);
    s.routing.assign(bins, -1);
    for (const json& entry : b.at("routing")) {
        if (!entry.is_array() || entry.size() != 2) {
            throw ValidationError("routing entries must be [bin, path] pairs");
        }
        const std::uint64_t bin = entry[0].get<std::uint64_t>();
        const int path = entry[1].get<int>();
        const int num_paths = s.kind == BlockKind::single_qubit ? 2 : 3;
        if (bin >= bins || path < 0 || path >= num_paths) {
            throw ValidationError("routing entry out of range");
        }
        if (s.routing[bin] != -1) {
            throw ValidationError("duplicate routing entry for one bin");
        }
        s.routing[bin] = path;
    }
    for (int path : s.routing) {
        if (path == -1) {
            throw ValidationError("routing must cover every bin");
        }
    }
    if (s.kind == BlockKind::single_qubit) {
        if (!b.contains("mzi") || b.at("mzi").is_null()) {
            throw ValidationError("active single-qubit block needs MZI settings");
        }
        const json& m = b.at("mzi");
        s.mzi = GateParams{m.at("theta").get<double>(), m.at("phi").get<double>(),
                           m.at("psi0").get<double>(), m.at("psi1").get<double>()};
    } else if (b.contains("mzi") && !b.at("mzi").is_null()) {
        throw ValidationError("CNOT block cannot carry MZI settings");
    }
    s.common_latency_in_T = b.at("common_latency_in_T").get<std::int64_t>();
    if (s.common_latency_in_T < 0) {
        throw ValidationError("block latency must be nonnegative");
    }
    s.support = b.at("support").get<std::vector<unsigned>>();
    for (unsigned q : s.support) {
        if (q >= num_qubits) {
            throw ValidationError("block support exceeds the register width");
        }
    }
    block.schedule = std::move(s);
    return block;
}

}  // namespace

nlohmann::json state_to_json(const QuditState& state) {
    json j;
    j["num_qubits"] = state.num_qubits();
    j["amplitudes"] = amps_to_json(state.amplitudes());
    if (state.lossy()) {
        j["lossy"] = true;
    }
    return j;
}

QuditState state_from_json(const nlohmann::json& j) {
    return guarded("state", [&] {
        const unsigned n = j.at("num_qubits").get<unsigned>();
        std::vector<Complex> amps = amps_from_json(j.at("amplitudes"));
        if (amps.size() != dim(n)) {
            throw ValidationError("amplitude count does not match num_qubits");
        }
        if (j.value("lossy", false)) {
            return QuditState::sub_normalized(std::move(amps));
        }
        return QuditState::from_amplitudes(std::move(amps));
    });
}

nlohmann::json joint_to_json(const JointState& state) {
    json j;
    j["qudit_widths"] = state.widths();
    j["amplitudes"] = amps_to_json(state.flat());
    return j;
}

JointState joint_from_json(const nlohmann::json& j) {
    return guarded("joint state", [&] {
        auto widths = j.at("qudit_widths").get<std::vector<unsigned>>();
        return JointState::from_flat(std::move(widths), amps_from_json(j.at("amplitudes")));
    });
}

nlohmann::json program_to_json(const OpticalProgram& program) {
    json j;
    j["num_qubits"] = program.num_qubits;
    j["bin_period"] = program.bin_period_s;
    json passes = json::array();
    for (const Pass& pass : program.passes) {
        json blocks = json::array();
        for (const PassBlock& block : pass.blocks) {
            blocks.push_back(block_to_json(block));
        }
        passes.push_back({{"blocks", std::move(blocks)}});
    }
    j["passes"] = std::move(passes);
    j["io"] = {{"injection_pass", program.injection_pass},
               {"extraction_pass", program.extraction_pass}};
    if (program.prep) {
        json steps = json::array();
        for (const PrepStep& step : program.prep->steps) {
            steps.push_back({{"transmittance", step.transmittance}, {"phase", step.phase}});
        }
        j["prep"] = {{"steps", std::move(steps)}};
    }
    return j;
}

OpticalProgram program_from_json(const nlohmann::json& j) {
    return guarded("program", [&] {
        OpticalProgram prog;
        prog.num_qubits = j.at("num_qubits").get<unsigned>();
        if (prog.num_qubits == 0 || prog.num_qubits > kMaxCompileQubits) {
            throw ValidationError("program register width out of range");
        }
        prog.bin_period_s = j.at("bin_period").get<double>();
        if (prog.bin_period_s <= 0.0) {
            throw ValidationError("bin period must be positive");
        }
        for (const json& p : j.at("passes")) {
            Pass pass;
            const json& blocks = p.at("blocks");
            if (blocks.size() != 2 * std::size_t{prog.num_qubits}) {
                throw ValidationError("each pass must list all 2N blocks");
            }
            for (const json& b : blocks) {
                pass.blocks.push_back(block_from_json(b, prog.num_qubits));
            }
            for (std::size_t i = 0; i < pass.blocks.size(); ++i) {
                if (pass.blocks[i].id.layout_index(prog.num_qubits) != i) {
                    throw ValidationError("blocks must appear in loop order");
                }
            }
            prog.passes.push_back(std::move(pass));
        }
        prog.injection_pass = j.at("io").at("injection_pass").get<std::size_t>();
        prog.extraction_pass = j.at("io").at("extraction_pass").get<std::size_t>();
        if (prog.injection_pass > prog.extraction_pass ||
            prog.extraction_pass > prog.passes.size()) {
            throw ValidationError("injection/extraction window out of range");
        }
        if (j.contains("prep")) {
            PrepSchedule prep;
            prep.num_qubits = prog.num_qubits;
            for (const json& s : j.at("prep").at("steps")) {
                const double t = s.at("transmittance").get<double>();
                if (t < 0.0 || t > 1.0 + 1e-12) {
                    throw ValidationError("prep transmittance must lie in [0, 1]");
                }
                prep.steps.push_back({t, s.at("phase").get<double>()});
            }
            if (prep.steps.size() != dim(prog.num_qubits)) {
                throw ValidationError("prep schedule must cover every bin");
            }
            prog.prep = std::move(prep);
        }
        return prog;
    });
}

nlohmann::json latency_to_json(const LatencyReport& report) {
    json j;
    j["per_pass_latency_in_T"] = report.per_pass_latency_in_T;
    j["total_latency_in_T"] = report.total_latency_in_T;
    j["total_storage_time_s"] = report.total_storage_time_s;
    j["elements_traversed"] = report.elements_traversed;
    j["survival_probability"] = report.survival_probability;
    return j;
}

nlohmann::json resources_to_json(const ResourceReport& report) {
    json j;
    j["num_bins"] = report.num_bins;
    j["loop_period_s"] = report.loop_period_s;
    j["fiber_length_m"] = report.fiber_length_m;
    j["elements"] = {{"switches", report.elements.switches},
                     {"delay_lines", report.elements.delay_lines},
                     {"phase_shifters", report.elements.phase_shifters},
                     {"beamsplitters", report.elements.beamsplitters},
                     {"distinct_delay_values", report.elements.distinct_delay_values},
                     {"total", report.elements.total()}};
    j["elements_traversed"] = report.elements_traversed;
    j["single_circuit_transmission"] = report.single_circuit_transmission;
    j["herald_probability"] = report.herald_probability;
    j["multi_qudit_success"] = report.multi_qudit_success;
    j["switch_window_ok"] = report.switch_window_ok;
    j["notes"] = report.notes;
    return j;
}

std::string bin_label(std::uint64_t j, unsigned num_qubits) {
    std::string s(num_qubits, '0');
    for (unsigned i = 0; i < num_qubits; ++i) {
        if ((j >> i) & 1) {
            s[num_qubits - 1 - i] = '1';
        }
    }
    return s;
}

nlohmann::json histogram_to_json(const SampleHistogram& h) {
    json counts = json::object();
    for (const auto& [outcome, tally] : h.counts) {
        counts[bin_label(outcome, h.num_qubits)] = tally;
    }
    json j;
    j["num_qubits"] = h.num_qubits;
    j["shots"] = h.shots;
    j["seed"] = h.seed;
    j["counts"] = std::move(counts);
    return j;
}

SampleHistogram histogram_from_json(const nlohmann::json& j) {
    return guarded("histogram", [&] {
        SampleHistogram h;
        h.num_qubits = j.at("num_qubits").get<unsigned>();
        h.shots = j.at("shots").get<std::uint64_t>();
        h.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& [label, tally] : j.at("counts").items()) {
            if (label.size() != h.num_qubits) {
                throw ValidationError("histogram label width mismatch");
            }
            std::uint64_t outcome = 0;
            for (char c : label) {
                if (c != '0' && c != '1') {
                    throw ValidationError("histogram labels must be bitstrings");
                }
                outcome = outcome * 2 + (c - '0');
            }
            h.counts[outcome] = tally.get<std::uint64_t>();
        }
        return h;
    });
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("cannot parse '" + path + "': " + e.what());
    }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write '" + path + "'");
    }
    out << dump_json(j);
}

std::string dump_json(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

}  // namespace qloop
