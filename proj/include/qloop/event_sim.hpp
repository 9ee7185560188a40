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
#include <optional>
#include <string>
#include <vector>

#include "qloop/circuit.hpp"
#include "qloop/compiler.hpp"
#include "qloop/qudit_state.hpp"

namespace qloop {

// Event-level execution of an OpticalProgram: amplitude packets with absolute
// timestamps hop through switches, fibers, phase shifters and beamsplitters
// exactly as routed.  Time lives on an integer T/2 grid so any misalignment
// shows up as an off-grid packet or a collision instead of silent
// interference; beamsplitters are the only nodes where two packets may meet.
// The MZI is traversed element by element (input phase, BS, arm phase, BS,
// output phases), not as a precomputed 2x2, so a wrong schedule cannot hide
// behind the matrix shortcut.

// Per-element intensity transmissions.  A photon crosses the same number of
// elements on every path through a block (balanced design), so with uniform
// transmission t the survival probability is exactly t^(elements traversed).
struct LossModel {
    double switch_t = 1.0;
    double delay_t = 1.0;
    double shifter_t = 1.0;
    double bs_t = 1.0;

    static LossModel uniform(double t) { return LossModel{t, t, t, t}; }

    bool lossless() const {
        return switch_t == 1.0 && delay_t == 1.0 && shifter_t == 1.0 && bs_t == 1.0;
    }
};

struct LatencyReport {
    std::vector<std::int64_t> per_pass_latency_in_T;
    std::int64_t total_latency_in_T = 0;
    double total_storage_time_s = 0.0;
    std::int64_t elements_traversed = 0;  // per photon, path-independent
    double survival_probability = 1.0;
};

struct SimulationResult {
    QuditState state;
    LatencyReport latency;
};

// Runs passes [injection_pass, extraction_pass).  The input overrides the
// program's prep schedule; with neither an input nor prep this throws.
// Throws CollisionError (naming pass and block) when the schedule is
// inconsistent.
SimulationResult simulate_program(const OpticalProgram& program,
                                  std::optional<QuditState> input = std::nullopt,
                                  const LossModel& loss = LossModel{});

// Closed-loop run of the preparation stage alone: the stored photon leaks
// amplitude t_j e^{i phase_j} into bin j on pass j.
QuditState simulate_prep(const PrepSchedule& schedule);

struct VerifyReport {
    bool passed = false;
    double max_deviation = 0.0;
    unsigned num_inputs = 0;
    std::vector<std::string> diagnostics;  // collision locations, mismatches
};

inline constexpr double kVerifyTol = 1e-9;

// Cross-checks the compiled program against the index-arithmetic reference
// on seeded random inputs (plus the prep output when the program has one);
// passes when every deviation is within kVerifyTol.
VerifyReport verify(const OpticalProgram& program, const CircuitIR& ir,
                    unsigned num_inputs = 20, std::uint64_t seed = 0x5eed0001u);

}  // namespace qloop
