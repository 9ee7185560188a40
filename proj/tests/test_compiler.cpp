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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "qloop/compiler.hpp"
#include "qloop/errors.hpp"
#include "qloop/event_sim.hpp"
#include "qloop/gates.hpp"
#include "qloop/json_io.hpp"
#include "qloop/parser.hpp"
#include "qloop/random.hpp"

using namespace qloop;

namespace {

CircuitIR circuit(const std::string& src) {
    const ParseResult r = parse(src);
    REQUIRE_MESSAGE(r.ok(), (r.error ? r.error->to_string() : ""));
    return *r.circuit;
}

}  // namespace

TEST_CASE("single-qubit block schedule: delays, windows, latency") {
    const BlockSchedule s = schedule_single_qubit_block(1, gate::H(), 2);
    CHECK(s.kind == BlockKind::single_qubit);
    CHECK(s.delays_in_T == std::vector<std::int64_t>{2, 0, 0, 2});
    // Bins with qubit 1 = 0 ride the delayed arm into port 0.
    CHECK(s.routing == std::vector<int>{0, 0, 1, 1});
    REQUIRE(s.mzi.has_value());
    CHECK(*s.mzi == decompose(gate::H()));
    CHECK(s.common_latency_in_T == 2);
    CHECK(s.support == std::vector<unsigned>{1});
}

TEST_CASE("cnot block schedule: idle/forward/direct windows") {
    // Control 1, target 0 on two qubits: delays (2^0, 2^1, 0), control-off
    // bins idle, bin 2 jumps forward to slot 3, bin 3 drops back to slot 2.
    const BlockSchedule s = schedule_cnot_block(0, 1, 2);
    CHECK(s.kind == BlockKind::cnot_target);
    CHECK(s.delays_in_T == std::vector<std::int64_t>{1, 2, 0});
    CHECK(s.routing == std::vector<int>{0, 0, 1, 2});
    CHECK_FALSE(s.mzi.has_value());
    CHECK(s.common_latency_in_T == 1);
    CHECK((s.support == std::vector<unsigned>{0, 1} ||
           s.support == std::vector<unsigned>{1, 0}));

    CHECK_THROWS_AS(schedule_cnot_block(1, 1, 2), ValidationError);
}

TEST_CASE("compile lowers one gate per pass onto the fixed layout") {
    const OpticalProgram prog = compile(circuit("qudit q 2\ngate H q[0]\ncnot q[0] q[1]\n"));
    CHECK(prog.num_qubits == 2);
    REQUIRE(prog.passes.size() == 2);
    CHECK(prog.injection_pass == 0);
    CHECK(prog.extraction_pass == 2);
    for (const Pass& pass : prog.passes) REQUIRE(pass.blocks.size() == 4);

    // Pass 0: H block on qubit 0 active, everything else bypassed.
    CHECK(prog.passes[0].blocks[0].active());
    CHECK(prog.passes[0].blocks[1].active() == false);
    CHECK(prog.passes[0].latency_in_T() == 1);
    // Pass 1: CNOT target block 1 active (layout position N + 1).
    CHECK(prog.passes[1].blocks[3].active());
    CHECK(prog.passes[1].latency_in_T() == 2);

    CHECK(traversed_elements(prog) == 24);
}

TEST_CASE("compile covers the controlled-X family and rejects the rest") {
    CHECK_NOTHROW(compile(circuit("qudit q 3\ntoffoli q[2] q[1] q[0]\n")));
    // cu with an X matrix (theta=0, phi=0, psi0=psi1=-pi/2) is a swap window.
    CHECK_NOTHROW(compile(circuit(
        "qudit q 2\ncu(0,0,-1.5707963267948966,-1.5707963267948966) q[1] q[0]\n")));
    CHECK_THROWS_AS(compile(circuit("qudit q 2\ncu(1,1,1,1) q[1] q[0]\n")),
                    UnsupportedError);
    CHECK_THROWS_AS(compile(circuit("qudit a 1\nqudit b 1\ngate H a[0]\n")),
                    UnsupportedError);
    CHECK_THROWS_AS(compile(circuit("qudit q 1\nspin s\nqnd s q[0]\n")),
                    UnsupportedError);
}

TEST_CASE("pack_passes merges gates with ascending layout and disjoint support") {
    const OpticalProgram loose =
        compile(circuit("qudit q 3\ngate H q[0]\ngate X q[1]\ncnot q[1] q[2]\n"));
    REQUIRE(loose.passes.size() == 3);
    const OpticalProgram packed = pack_passes(loose);
    // H(q0) and X(q1) share a pass; the CNOT touches q1 again and q2.
    REQUIRE(packed.passes.size() == 2);
    CHECK(packed.passes[0].blocks[0].active());
    CHECK(packed.passes[0].blocks[1].active());
    CHECK(packed.passes[1].blocks[5].active());
    CHECK(pack_passes(packed) == packed);

    // Same qubit twice cannot merge.
    const OpticalProgram serial = pack_passes(
        compile(circuit("qudit q 2\ngate H q[0]\ngate X q[0]\n")));
    CHECK(serial.passes.size() == 2);

    // A merged pass still simulates correctly.
    const CircuitIR ir = circuit("qudit q 3\ngate H q[0]\ngate X q[1]\ncnot q[1] q[2]\n");
    const SimulationResult res =
        simulate_program(pack_passes(compile(ir)), QuditState::basis(3, 0));
    CHECK(approx_equal_phase(res.state, run_circuit(ir), 1e-10));
}

TEST_CASE("event-level simulation reproduces the logical circuit") {
    const CircuitIR ir = circuit("qudit q 2\ngate H q[0]\ncnot q[0] q[1]\n");
    const OpticalProgram prog = compile(ir);
    const SimulationResult res = simulate_program(prog, QuditState::basis(2, 0));
    CHECK(approx_equal_phase(res.state, run_circuit(ir), 1e-10));
    CHECK(res.latency.per_pass_latency_in_T == std::vector<std::int64_t>{1, 2});
    CHECK(res.latency.total_latency_in_T == 3);
    CHECK(res.latency.elements_traversed == 24);
    CHECK(res.latency.survival_probability == doctest::Approx(1.0));

    Rng rng(404);
    for (int k = 0; k < 5; ++k) {
        const QuditState in = random_state(2, rng);
        CHECK(approx_equal_phase(simulate_program(prog, in).state, run_circuit(ir, in),
                                 1e-10));
    }
}

TEST_CASE("uniform loss scales amplitudes by sqrt(t) per element") {
    const CircuitIR ir = circuit("qudit q 2\ngate H q[0]\ncnot q[0] q[1]\n");
    const OpticalProgram prog = compile(ir);
    const double t = 0.9;
    const SimulationResult res =
        simulate_program(prog, QuditState::basis(2, 0), LossModel::uniform(t));
    CHECK(res.state.lossy());
    const double expected = std::pow(t, 24);
    CHECK(res.latency.survival_probability == doctest::Approx(expected).epsilon(1e-12));
    // The surviving state is the ideal one scaled uniformly.
    const QuditState ideal = run_circuit(ir);
    for (std::uint64_t j = 0; j < 4; ++j)
        CHECK(std::abs(res.state.amp(j) - ideal.amp(j) * std::sqrt(expected)) < 1e-12);
}

TEST_CASE("bad routing is caught as a collision or frame error") {
    OpticalProgram prog = compile(circuit("qudit q 2\ncnot q[1] q[0]\n"));
    // Forcing a control-off bin onto the forward fiber lands it on an
    // occupied slot.
    prog.passes[0].blocks[2].schedule->routing[1] = 1;
    CHECK_THROWS_AS(simulate_program(prog, QuditState::from_amplitudes(
                                               {{0.5, 0}, {0.5, 0}, {0.5, 0}, {0.5, 0}})),
                    CollisionError);
    try {
        simulate_program(prog, QuditState::from_amplitudes(
                                   {{0.5, 0}, {0.5, 0}, {0.5, 0}, {0.5, 0}}));
    } catch (const CollisionError& e) {
        CHECK(e.pass_index == 0);
        CHECK(e.block_index == 2);
    }

    const VerifyReport rep =
        verify(prog, circuit("qudit q 2\ncnot q[1] q[0]\n"));
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.diagnostics.empty());
}

TEST_CASE("verify cross-checks a correct program") {
    const CircuitIR ir = circuit("qudit q 3\ngate H q[0]\ntoffoli q[2] q[1] q[0]\n"
                                 "gate TG q[2]\ncnot q[0] q[2]\n");
    const VerifyReport rep = verify(compile(ir), ir, 10);
    CHECK(rep.passed);
    CHECK(rep.max_deviation < kVerifyTol);
    CHECK(rep.num_inputs >= 10);
}

TEST_CASE("prep schedule leaks the target amplitudes bin by bin") {
    // Uniform |+>: t^2 = 1/2 then 1.
    const QuditState plus = QuditState::from_amplitudes(
        {{1.0 / std::sqrt(2.0), 0}, {1.0 / std::sqrt(2.0), 0}});
    const PrepSchedule sched = prep_schedule(plus);
    REQUIRE(sched.steps.size() == 2);
    CHECK(sched.steps[0].transmittance == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(sched.steps[1].transmittance == doctest::Approx(1.0));
    CHECK(approx_equal_phase(simulate_prep(sched), plus, 1e-12));

    // Delta target: everything leaves on the first pass.
    const PrepSchedule delta = prep_schedule(QuditState::basis(2, 0));
    CHECK(delta.steps[0].transmittance == doctest::Approx(1.0));
    CHECK(approx_equal_phase(simulate_prep(delta), QuditState::basis(2, 0), 1e-12));

    // Zero amplitudes and phases survive the round trip.
    Rng rng(88);
    for (int k = 0; k < 10; ++k) {
        std::vector<Complex> amps = random_amplitudes(8, rng);
        amps[2] = amps[5] = Complex{0, 0};
        const QuditState target = QuditState::from_amplitudes(std::move(amps), true);
        CHECK(approx_equal_phase(simulate_prep(prep_schedule(target)), target, 1e-10));
    }
}

TEST_CASE("a prepare statement becomes the program prep and simulates") {
    const CircuitIR ir = circuit("qudit q 1\nprepare q [0.6,0; 0,0.8]\ngate H q[0]\n");
    const OpticalProgram prog = compile(ir);
    REQUIRE(prog.prep.has_value());
    const SimulationResult res = simulate_program(prog);  // no explicit input
    CHECK(approx_equal_phase(res.state, run_circuit(ir), 1e-10));

    // An explicit input overrides the prep schedule.
    const SimulationResult forced = simulate_program(prog, QuditState::basis(1, 1));
    const QuditState expected = apply_gate_on_qubit(QuditState::basis(1, 1), gate::H(), 0);
    CHECK(approx_equal_phase(forced.state, expected, 1e-10));

    CHECK_THROWS_AS(simulate_program(compile(circuit("qudit q 1\ngate H q[0]\n"))),
                    ValidationError);
}

TEST_CASE("element inventory is affine with N distinct delays") {
    const ElementCount c1 = count_elements(1);
    CHECK(c1.switches == 8);
    CHECK(c1.delay_lines == 5);
    CHECK(c1.phase_shifters == 5);
    CHECK(c1.beamsplitters == 2);
    CHECK(c1.total() == 20);
    CHECK(c1.distinct_delay_values == 1);

    for (unsigned n = 2; n + 1 <= 20; ++n) {
        const ElementCount a = count_elements(n - 1);
        const ElementCount b = count_elements(n);
        const ElementCount c = count_elements(n + 1);
        CHECK((c.total() - b.total()) == (b.total() - a.total()));
        CHECK(b.distinct_delay_values == n);
    }
    CHECK(count_elements(20).total() == 286);
}

TEST_CASE("program documents round-trip through JSON") {
    const CircuitIR ir =
        circuit("qudit q 2\nprepare q [0.5,0; 0.5,0; 0.5,0; 0,0.5]\n"
                "gate H q[1]\ncnot q[1] q[0]\nmeasure q\n");
    const OpticalProgram prog = pack_passes(compile(ir));
    const OpticalProgram back = program_from_json(program_to_json(prog));
    CHECK(back == prog);

    nlohmann::json j = program_to_json(prog);
    j["passes"][0]["blocks"][0]["qubit"] = 7;
    CHECK_THROWS_AS(program_from_json(j), ValidationError);
}

TEST_CASE("state and histogram documents round-trip through JSON") {
    Rng rng(3);
    const QuditState s = random_state(3, rng);
    const QuditState back = state_from_json(state_to_json(s));
    for (std::uint64_t j = 0; j < s.size(); ++j) CHECK(back.amp(j) == s.amp(j));

    const QuditState lossy = QuditState::sub_normalized({{0.25, 0}, {0, 0}});
    CHECK(state_from_json(state_to_json(lossy)).lossy());

    SampleHistogram h;
    h.num_qubits = 2;
    h.shots = 10;
    h.seed = 42;
    h.counts[0] = 4;
    h.counts[3] = 6;
    const SampleHistogram hb = histogram_from_json(histogram_to_json(h));
    CHECK(hb.counts == h.counts);
    CHECK(bin_label(5, 4) == "0101");
    CHECK(bin_label(0, 2) == "00");
}
