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

#include "qloop/event_sim.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "qloop/bitops.hpp"
#include "qloop/errors.hpp"
#include "qloop/gates.hpp"
#include "qloop/random.hpp"

namespace qloop {

namespace {

using PacketMap = std::map<std::int64_t, Complex>;  // absolute tick (T/2) -> amplitude

constexpr Complex kI{0.0, 1.0};

struct Stepper {
    const OpticalProgram& program;
    const LossModel& loss;
    std::size_t pass_index = 0;
    std::size_t block_index = 0;

    // Amplitude factors per element category (intensity -> amplitude).
    double f_switch, f_delay, f_shifter, f_bs;

    Stepper(const OpticalProgram& p, const LossModel& l)
        : program(p),
          loss(l),
          f_switch(std::sqrt(l.switch_t)),
          f_delay(std::sqrt(l.delay_t)),
          f_shifter(std::sqrt(l.shifter_t)),
          f_bs(std::sqrt(l.bs_t)) {}

    [[noreturn]] void collide(const std::string& what) const {
        throw CollisionError("pass " + std::to_string(pass_index) + ", block "
                                 + std::to_string(block_index) + ": " + what,
                             pass_index, block_index);
    }

    // Slot of a packet given the latency accumulated so far; off-grid ticks
    // are schedule bugs.
    std::uint64_t slot_of(std::int64_t tick, std::int64_t entry_latency_ticks,
                          std::uint64_t num_bins) const {
        const std::int64_t rel = tick - entry_latency_ticks;
        if (rel < 0 || (rel & 1))
            collide("packet off the T grid (tick " + std::to_string(tick) + ")");
        const auto slot = static_cast<std::uint64_t>(rel / 2);
        if (slot >= num_bins)
            collide("packet outside the bin frame (slot " + std::to_string(slot) + ")");
        return slot;
    }

    void merge_into(PacketMap& out, std::int64_t tick, Complex amp) const {
        if (amp == Complex{0.0, 0.0})
            return;
        const auto [it, fresh] = out.emplace(tick, amp);
        if (!fresh)
            collide("amplitude collision at block output (tick " + std::to_string(tick) + ")");
    }

    PacketMap run_single_qubit(const PacketMap& in, const BlockSchedule& s,
                               std::int64_t entry_latency_ticks, std::uint64_t num_bins) const {
        if (s.delays_in_T.size() != 4 || !s.mzi || s.routing.size() != num_bins)
            throw ValidationError("malformed single-qubit block schedule");
        const GateParams& p = *s.mzi;
        const Complex e_phi = std::polar(1.0, p.phi);
        const Complex e_theta = std::polar(1.0, p.theta);
        const Complex e_psi0 = std::polar(1.0, p.psi0);
        const Complex e_psi1 = std::polar(1.0, p.psi1);
        const double is2 = 1.0 / std::numbers::sqrt2;

        // Input switch + pre-delay fiber + MZI input phase, per packet.
        PacketMap port0, port1;
        const double pre_factor = f_switch * f_delay * f_shifter;
        for (const auto& [tick, amp] : in) {
            const std::uint64_t slot = slot_of(tick, entry_latency_ticks, num_bins);
            const int path = s.routing[slot];
            if (path != 0 && path != 1)
                throw ValidationError("single-qubit block routing must use paths 0/1");
            PacketMap& arm = path == 0 ? port0 : port1;
            const std::int64_t out_tick = tick + 2 * s.delays_in_T[path];
            Complex a = amp * pre_factor;
            if (path == 0)
                a *= e_phi;  // phase shifter on input port 0 (port 1 set to 0)
            if (!arm.emplace(out_tick, a).second)
                collide("two packets on one MZI input (tick " + std::to_string(out_tick) + ")");
        }

        // BS, arm phase, BS, output phases; then post-delay and the merge
        // switch.  Lone packets split across both arms -- that is physical,
        // and any downstream clash is caught as a collision.
        PacketMap out;
        const double post_factor = f_delay * f_switch;
        auto it0 = port0.begin();
        auto it1 = port1.begin();
        while (it0 != port0.end() || it1 != port1.end()) {
            std::int64_t tick;
            Complex a0{0.0, 0.0}, a1{0.0, 0.0};
            if (it1 == port1.end() || (it0 != port0.end() && it0->first < it1->first)) {
                tick = it0->first;
                a0 = it0->second;
                ++it0;
            } else if (it0 == port0.end() || it1->first < it0->first) {
                tick = it1->first;
                a1 = it1->second;
                ++it1;
            } else {
                tick = it0->first;
                a0 = it0->second;
                a1 = it1->second;
                ++it0;
                ++it1;
            }

            Complex b0 = (a0 + kI * a1) * is2 * f_bs;
            Complex b1 = (kI * a0 + a1) * is2 * f_bs;
            b0 *= e_theta * f_shifter;  // arm phase (balanced shifter on the other arm at 0)
            b1 *= f_shifter;
            const Complex c0 = (b0 + kI * b1) * is2 * f_bs * e_psi0 * f_shifter;
            const Complex c1 = (kI * b0 + b1) * is2 * f_bs * e_psi1 * f_shifter;

            merge_into(out, tick + 2 * s.delays_in_T[2], c0 * post_factor);
            merge_into(out, tick + 2 * s.delays_in_T[3], c1 * post_factor);
        }
        return out;
    }

    PacketMap run_cnot(const PacketMap& in, const BlockSchedule& s,
                       std::int64_t entry_latency_ticks, std::uint64_t num_bins) const {
        if (s.delays_in_T.size() != 3 || s.routing.size() != num_bins)
            throw ValidationError("malformed CNOT block schedule");
        PacketMap out;
        const double factor = f_switch * f_delay * f_switch;
        for (const auto& [tick, amp] : in) {
            const std::uint64_t slot = slot_of(tick, entry_latency_ticks, num_bins);
            const int path = s.routing[slot];
            if (path < 0 || path > 2)
                throw ValidationError("CNOT block routing must use paths 0/1/2");
            merge_into(out, tick + 2 * s.delays_in_T[path], amp * factor);
        }
        return out;
    }
};

}  // namespace

QuditState simulate_prep(const PrepSchedule& schedule) {
    const std::uint64_t d = dim(schedule.num_qubits);
    if (schedule.steps.size() != d)
        throw DimensionError("prep schedule needs one step per bin");

    std::vector<Complex> amps(d);
    double stored = 1.0;  // amplitude still circulating, real by construction
    for (std::uint64_t j = 0; j < d; ++j) {
        const auto& [t, phase] = schedule.steps[j];
        if (t < 0.0 || t > 1.0)
            throw ValidationError("prep transmittance outside [0, 1]");
        amps[j] = stored * t * std::polar(1.0, phase);
        stored *= std::sqrt(std::max(0.0, 1.0 - t * t));
    }
    return QuditState::from_amplitudes(std::move(amps));
}

SimulationResult simulate_program(const OpticalProgram& program, std::optional<QuditState> input,
                                  const LossModel& loss) {
    const unsigned n = program.num_qubits;
    const std::uint64_t d = dim(n);
    if (program.extraction_pass > program.passes.size()
        || program.injection_pass > program.extraction_pass)
        throw ValidationError("program injection/extraction window is inconsistent");

    if (!input) {
        if (!program.prep)
            throw ValidationError("program has no prep schedule; an input state is required");
        input = simulate_prep(*program.prep);
    }
    if (input->num_qubits() != n)
        throw DimensionError("input state width does not match the program");
    input->require_normalized();

    Stepper stepper(program, loss);

    PacketMap packets;
    for (std::uint64_t j = 0; j < d; ++j) {
        const Complex a = input->amplitudes()[j];
        if (a != Complex{0.0, 0.0})
            packets.emplace(2 * static_cast<std::int64_t>(j), a);
    }

    LatencyReport report;
    std::int64_t latency_ticks = 0;

    for (std::size_t p = program.injection_pass; p < program.extraction_pass; ++p) {
        stepper.pass_index = p;
        const Pass& pass = program.passes[p];
        std::int64_t pass_latency_ticks = 0;

        for (std::size_t b = 0; b < pass.blocks.size(); ++b) {
            stepper.block_index = b;
            const PassBlock& block = pass.blocks[b];
            if (!block.active()) {
                // Bypassed block: the loop threads its two switches in the
                // bar state; no delay.
                report.elements_traversed += 2;
                if (!loss.lossless())
                    for (auto& [tick, amp] : packets)
                        amp *= stepper.f_switch * stepper.f_switch;
                continue;
            }

            const BlockSchedule& s = *block.schedule;
            const std::int64_t entry = latency_ticks + pass_latency_ticks;
            if (s.kind == BlockKind::single_qubit) {
                packets = stepper.run_single_qubit(packets, s, entry, d);
                report.elements_traversed += 9;
            } else {
                packets = stepper.run_cnot(packets, s, entry, d);
                report.elements_traversed += 3;
            }
            pass_latency_ticks += 2 * s.common_latency_in_T;
        }

        latency_ticks += pass_latency_ticks;
        report.per_pass_latency_in_T.push_back(pass_latency_ticks / 2);

        // Frame check: after a full pass every packet must sit on its slot
        // shifted by the accumulated common latency.
        stepper.block_index = pass.blocks.size();
        for (const auto& [tick, amp] : packets)
            (void)stepper.slot_of(tick, latency_ticks, d);
    }

    std::vector<Complex> amps(d, Complex{0.0, 0.0});
    stepper.pass_index = program.extraction_pass;
    stepper.block_index = 0;
    double survival = 0.0;
    for (const auto& [tick, amp] : packets) {
        amps[stepper.slot_of(tick, latency_ticks, d)] = amp;
        survival += std::norm(amp);
    }

    report.total_latency_in_T = latency_ticks / 2;
    report.total_storage_time_s =
        static_cast<double>(report.total_latency_in_T) * program.bin_period_s
        + static_cast<double>(d) * program.bin_period_s
              * static_cast<double>(program.extraction_pass - program.injection_pass);
    report.survival_probability = survival;

    QuditState state = loss.lossless() ? QuditState::from_amplitudes(std::move(amps))
                                       : QuditState::sub_normalized(std::move(amps));
    return SimulationResult{std::move(state), std::move(report)};
}

VerifyReport verify(const OpticalProgram& program, const CircuitIR& ir, unsigned num_inputs,
                    std::uint64_t seed) {
    VerifyReport report;
    report.num_inputs = num_inputs;
    Rng rng(seed);
    const unsigned n = program.num_qubits;

    auto check_one = [&](std::optional<QuditState> input, const std::string& label) {
        try {
            const QuditState reference = run_circuit(ir, input);
            const SimulationResult sim = simulate_program(program, std::move(input));
            const StateComparison cmp = equal_up_to_global_phase(sim.state, reference);
            report.max_deviation = std::max(report.max_deviation, cmp.max_abs_diff);
            if (cmp.max_abs_diff > kVerifyTol)
                report.diagnostics.push_back(label + ": deviation "
                                             + std::to_string(cmp.max_abs_diff));
        } catch (const CollisionError& e) {
            report.diagnostics.push_back(label + ": " + e.what());
            report.max_deviation = std::numeric_limits<double>::infinity();
        }
    };

    for (unsigned k = 0; k < num_inputs; ++k)
        check_one(random_state(n, rng), "input " + std::to_string(k));
    if (program.prep)
        check_one(std::nullopt, "prep output");

    report.passed = report.diagnostics.empty() && report.max_deviation <= kVerifyTol;
    return report;
}

}  // namespace qloop
