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

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"
#include "qloop/cavity.hpp"
#include "qloop/compiler.hpp"
#include "qloop/event_sim.hpp"
#include "qloop/qudit_state.hpp"
#include "qloop/resources.hpp"

namespace qloop {

// JSON document formats.  nlohmann::json keeps object keys sorted, so every
// document serializes byte-identically for identical values; all tools rely
// on that for reproducible output.
//
//   state      {"num_qubits", "amplitudes": [[re, im], ...], "lossy"?}
//   joint      {"qudit_widths": [...], "amplitudes": [[re, im], ...]}
//              (flat tensor, spin axis last, spin index 0 = up)
//   program    {"num_qubits", "bin_period", "passes": [{"blocks": [...]}],
//               "io": {"injection_pass", "extraction_pass"}, "prep"?}
//     block    {"kind", "qubit", "active", and when active: "delays_in_T",
//               "routing": [[bin, path], ...], "mzi"|null,
//               "common_latency_in_T", "support"}
//   latency    {"per_pass_latency_in_T", "total_latency_in_T",
//               "total_storage_time_s", "elements_traversed",
//               "survival_probability"}
//   resources  mirror of ResourceReport
//   histogram  {"num_qubits", "shots", "seed", "counts": {bitstring: n}}

nlohmann::json state_to_json(const QuditState& state);
QuditState state_from_json(const nlohmann::json& j);

nlohmann::json joint_to_json(const JointState& state);
JointState joint_from_json(const nlohmann::json& j);

nlohmann::json program_to_json(const OpticalProgram& program);
OpticalProgram program_from_json(const nlohmann::json& j);

nlohmann::json latency_to_json(const LatencyReport& report);

nlohmann::json resources_to_json(const ResourceReport& report);

struct SampleHistogram {
    unsigned num_qubits = 0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // outcome bin -> tally
};

nlohmann::json histogram_to_json(const SampleHistogram& h);
SampleHistogram histogram_from_json(const nlohmann::json& j);

// Outcome label: binary digits of j, qubit N-1 first.
std::string bin_label(std::uint64_t j, unsigned num_qubits);

// File round trips; parse problems surface as ValidationError.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

// Canonical text form: 2-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace qloop
