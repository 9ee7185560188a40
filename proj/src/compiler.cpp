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

#include "qloop/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qloop/bitops.hpp"
#include "qloop/errors.hpp"
#include "qloop/gates.hpp"

namespace qloop {

namespace {

void check_compile_width(unsigned num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxCompileQubits)
        throw RangeError("compiler limited to 1.." + std::to_string(kMaxCompileQubits)
                         + " qubits");
}

// All 2N blocks of one pass, none active yet.
Pass empty_pass(unsigned num_qubits) {
    Pass pass;
    pass.blocks.reserve(2 * num_qubits);
    for (unsigned i = 0; i < num_qubits; ++i)
        pass.blocks.push_back({BlockId{BlockKind::single_qubit, i}, std::nullopt});
    for (unsigned n = 0; n < num_qubits; ++n)
        pass.blocks.push_back({BlockId{BlockKind::cnot_target, n}, std::nullopt});
    return pass;
}

Pass pass_with(unsigned num_qubits, BlockSchedule schedule) {
    Pass pass = empty_pass(num_qubits);
    const unsigned idx = BlockId{schedule.kind, schedule.qubit}.layout_index(num_qubits);
    pass.blocks[idx].schedule = std::move(schedule);
    return pass;
}

bool matrix_is_x(const Mat2& u) {
    return (u - gate::X()).cwiseAbs().maxCoeff() <= 1e-12;
}

}  // namespace

std::int64_t Pass::latency_in_T() const {
    std::int64_t latency = 0;
    for (const auto& b : blocks)
        if (b.active())
            latency += b.schedule->common_latency_in_T;
    return latency;
}

BlockSchedule schedule_single_qubit_block(unsigned qubit, const Mat2& u, unsigned num_qubits) {
    check_compile_width(num_qubits);
    check_qubit(qubit, num_qubits);
    const std::uint64_t d = dim(num_qubits);
    const std::int64_t step = std::int64_t{1} << qubit;

    BlockSchedule s;
    s.kind = BlockKind::single_qubit;
    s.qubit = qubit;
    s.delays_in_T = {step, 0, 0, step};
    s.routing.resize(d);
    for (std::uint64_t j = 0; j < d; ++j)
        s.routing[j] = in_zero_set(j, qubit, num_qubits) ? 0 : 1;
    s.mzi = decompose(u);
    s.common_latency_in_T = step;
    s.support = {qubit};
    return s;
}

BlockSchedule schedule_cnot_block(unsigned target, unsigned control, unsigned num_qubits) {
    if (control == target)
        throw ValidationError("cnot control and target must differ");
    const unsigned controls[1] = {control};
    return schedule_swap_block(target, controls, num_qubits);
}

BlockSchedule schedule_swap_block(unsigned target, std::span<const unsigned> controls,
                                  unsigned num_qubits) {
    check_compile_width(num_qubits);
    check_qubit(target, num_qubits);
    const std::uint64_t d = dim(num_qubits);
    const std::int64_t step = std::int64_t{1} << target;

    std::uint64_t cmask = 0;
    for (unsigned c : controls) {
        check_qubit(c, num_qubits);
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (c == target || (cmask & bit))
            throw ValidationError("controls and target must be distinct");
        cmask |= bit;
    }

    BlockSchedule s;
    s.kind = BlockKind::cnot_target;
    s.qubit = target;
    s.delays_in_T = {step, 2 * step, 0};
    s.routing.resize(d);
    const std::uint64_t tbit = std::uint64_t{1} << target;
    for (std::uint64_t j = 0; j < d; ++j) {
        if ((j & cmask) != cmask)
            s.routing[j] = 0;  // idle: keep slot, delay 2^n
        else
            s.routing[j] = (j & tbit) ? 2 : 1;  // direct (0) or forward (2^{n+1})
    }
    s.mzi = std::nullopt;
    s.common_latency_in_T = step;
    s.support.assign(controls.begin(), controls.end());
    s.support.push_back(target);
    std::sort(s.support.begin(), s.support.end());
    return s;
}

OpticalProgram compile(const CircuitIR& ir, double bin_period_s) {
    if (!ir.single_qudit())
        throw UnsupportedError("compile supports single-qudit circuits");
    if (ir.uses_spin_statements())
        throw UnsupportedError("spin protocols have no loop schedule");
    if (bin_period_s <= 0.0)
        throw ValidationError("bin period must be positive");
    const unsigned n = ir.qudits.front().width;
    check_compile_width(n);

    OpticalProgram prog;
    prog.num_qubits = n;
    prog.bin_period_s = bin_period_s;

    for (const auto& st : ir.statements) {
        if (const auto* g = std::get_if<GateStmt>(&st)) {
            prog.passes.push_back(
                pass_with(n, schedule_single_qubit_block(g->qubit, statement_matrix(*g), n)));
        } else if (const auto* g = std::get_if<CnotStmt>(&st)) {
            prog.passes.push_back(pass_with(n, schedule_cnot_block(g->target, g->control, n)));
        } else if (const auto* g = std::get_if<ToffoliStmt>(&st)) {
            const unsigned controls[2] = {g->control_a, g->control_b};
            prog.passes.push_back(pass_with(n, schedule_swap_block(g->target, controls, n)));
        } else if (const auto* g = std::get_if<ControlledUStmt>(&st)) {
            const Mat2 u = cell_matrix(g->params);
            if (g->controls.empty()) {
                prog.passes.push_back(pass_with(n, schedule_single_qubit_block(g->target, u, n)));
            } else if (matrix_is_x(u)) {
                prog.passes.push_back(pass_with(n, schedule_swap_block(g->target, g->controls, n)));
            } else {
                // A static per-pass MZI setting cannot gate only the
                // control-selected pairs; only the controlled-X family has
                // pure switch-window schedules.
                throw UnsupportedError("controlled-U beyond controlled-X has no loop schedule");
            }
        } else if (const auto* g = std::get_if<PrepareStmt>(&st)) {
            prog.prep = prep_schedule(QuditState::from_amplitudes(g->amplitudes));
        } else if (std::holds_alternative<MeasureStmt>(st)) {
            // extraction marker; the program always extracts after the last pass
        } else {
            throw UnsupportedError("statement kind not supported by compile");
        }
    }

    prog.injection_pass = 0;
    prog.extraction_pass = prog.passes.size();
    return prog;
}

OpticalProgram pack_passes(const OpticalProgram& program) {
    OpticalProgram packed;
    packed.num_qubits = program.num_qubits;
    packed.bin_period_s = program.bin_period_s;
    packed.prep = program.prep;

    std::set<unsigned> used;  // qubit support of the open pass
    int last_layout = -1;
    bool open = false;

    for (const auto& pass : program.passes) {
        for (const auto& block : pass.blocks) {
            if (!block.active())
                continue;
            const unsigned layout = block.id.layout_index(program.num_qubits);
            const bool disjoint = std::none_of(block.schedule->support.begin(),
                                               block.schedule->support.end(),
                                               [&](unsigned q) { return used.count(q); });
            if (!open || static_cast<int>(layout) <= last_layout || !disjoint) {
                packed.passes.push_back(empty_pass(program.num_qubits));
                used.clear();
                open = true;
            }
            packed.passes.back().blocks[layout].schedule = block.schedule;
            last_layout = static_cast<int>(layout);
            used.insert(block.schedule->support.begin(), block.schedule->support.end());
        }
    }

    packed.injection_pass = 0;
    packed.extraction_pass = packed.passes.size();
    return packed;
}

PrepSchedule prep_schedule(const QuditState& target) {
    target.require_normalized(kConstructNormTol);

    PrepSchedule sched;
    sched.num_qubits = target.num_qubits();
    sched.steps.reserve(target.size());

    double residual = 1.0;  // 1 - sum of earlier |a_k|^2
    for (std::uint64_t j = 0; j < target.size(); ++j) {
        const Complex a = target.amplitudes()[j];
        const double p = std::norm(a);
        double t = 0.0;
        if (residual > 1e-15 && p > 0.0)
            t = std::sqrt(std::min(1.0, p / residual));
        const double phase = (p > 0.0) ? std::arg(a) : 0.0;
        sched.steps.push_back({t, phase});
        residual -= p;
    }
    return sched;
}

ElementCount count_elements(unsigned num_qubits) {
    if (num_qubits == 0)
        throw RangeError("element count needs at least one qubit");
    const std::int64_t n = num_qubits;
    ElementCount c;
    // Per single-qubit block: in/out switch, two arm fibers, two
    // beamsplitters, four phase settings (input, arm, two outputs).
    // Per CNOT block: in/out switch, two delay fibers above the direct path.
    // Fixed: injection/extraction switches, prep-loop in/out switches, the
    // prep loop fiber and its phase shifter.
    c.switches = 2 * n + 2 * n + 4;
    c.delay_lines = 2 * n + 2 * n + 1;
    c.beamsplitters = 2 * n;
    c.phase_shifters = 4 * n + 1;
    c.distinct_delay_values = n;  // one delay class 2^target per CNOT block
    return c;
}

std::int64_t traversed_elements(const OpticalProgram& program) {
    std::int64_t count = 0;
    for (const auto& pass : program.passes) {
        for (const auto& block : pass.blocks) {
            if (!block.active()) {
                count += 2;  // bar-state in/out switches of a bypassed block
            } else if (block.id.kind == BlockKind::single_qubit) {
                count += 9;  // 2 switches, 2 fibers, 2 beamsplitters, 3 phases
            } else {
                count += 3;  // 2 switches and one of the three fibers
            }
        }
    }
    return count;
}

}  // namespace qloop
