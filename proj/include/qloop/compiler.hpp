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
#include <span>
#include <vector>

#include "qloop/circuit.hpp"
#include "qloop/matrix.hpp"
#include "qloop/mzi.hpp"
#include "qloop/qudit_state.hpp"

namespace qloop {

// Lowers gate circuits onto the fixed processing-loop layout: N single-qubit
// blocks followed by N CNOT-target blocks, identical in every pass.  A block
// acts through fast switches that route each time bin onto one of a few fixed
// fiber paths; which bins take which path (the switch windows) is the whole
// program.  Every active block delays all bins by one common latency, so bins
// stay on the j*T grid with a per-pass offset and never collide.

enum class BlockKind { single_qubit, cnot_target };

// compile() builds one routing entry per bin, so keep widths sane here; the
// resource arithmetic handles large N without ever building a program.
inline constexpr unsigned kMaxCompileQubits = 16;

struct BlockId {
    BlockKind kind;
    unsigned qubit;  // i for single_qubit, target n for cnot_target

    // Position in the loop: SQ(0..N-1), then CNOT(0..N-1).
    unsigned layout_index(unsigned num_qubits) const {
        return kind == BlockKind::single_qubit ? qubit : num_qubits + qubit;
    }

    friend bool operator==(const BlockId&, const BlockId&) = default;
};

struct BlockSchedule {
    BlockKind kind;
    unsigned qubit;

    // single_qubit: {pre0, pre1, post0, post1} = {2^i, 0, 0, 2^i}; path 0 is
    //   the pre-delayed arm carrying the Z_i bins into MZI port 0.
    // cnot_target: {idle, forward, direct} = {2^n, 2^{n+1}, 0}; inactive bins
    //   ride the idle fiber, swapped bins take forward (bit n = 0) or direct
    //   (bit n = 1).
    std::vector<std::int64_t> delays_in_T;

    std::vector<int> routing;  // bin j -> path label, all 2^N bins

    std::optional<GateParams> mzi;  // single_qubit blocks only

    std::int64_t common_latency_in_T;

    std::vector<unsigned> support;  // qubits this block acts on (target + controls)

    friend bool operator==(const BlockSchedule&, const BlockSchedule&) = default;
};

struct PassBlock {
    BlockId id;
    std::optional<BlockSchedule> schedule;  // engaged iff the block is active

    bool active() const { return schedule.has_value(); }

    friend bool operator==(const PassBlock&, const PassBlock&) = default;
};

struct Pass {
    std::vector<PassBlock> blocks;  // all 2N blocks, loop order

    std::int64_t latency_in_T() const;

    friend bool operator==(const Pass&, const Pass&) = default;
};

// Preparation loop settings: pass j transmits amplitude t_j e^{i phase_j} of
// the stored photon into bin j and keeps sqrt(1 - t_j^2) circulating.
struct PrepStep {
    double transmittance;  // t_j in [0, 1]
    double phase;

    friend bool operator==(const PrepStep&, const PrepStep&) = default;
};

struct PrepSchedule {
    unsigned num_qubits;
    std::vector<PrepStep> steps;  // exactly 2^N

    friend bool operator==(const PrepSchedule&, const PrepSchedule&) = default;
};

struct OpticalProgram {
    unsigned num_qubits = 0;
    double bin_period_s = 1e-9;
    std::vector<Pass> passes;
    std::size_t injection_pass = 0;
    std::size_t extraction_pass = 0;  // one past the last executed pass
    std::optional<PrepSchedule> prep;

    friend bool operator==(const OpticalProgram&, const OpticalProgram&) = default;
};

struct ElementCount {
    std::int64_t switches;
    std::int64_t delay_lines;
    std::int64_t phase_shifters;
    std::int64_t beamsplitters;
    std::int64_t distinct_delay_values;  // CNOT delay classes, one per target

    std::int64_t total() const { return switches + delay_lines + phase_shifters + beamsplitters; }

    friend bool operator==(const ElementCount&, const ElementCount&) = default;
};

// u across qubit i: Z_i bins pre-delayed by 2^i*T onto MZI port 0, partners
// direct into port 1, outputs re-timed so everything exits 2^i*T late.
BlockSchedule schedule_single_qubit_block(unsigned qubit, const Mat2& u, unsigned num_qubits);

// Swap windows for cnot(control -> target): bins with the control bit set
// move by +-2^target*T, everything else idles by the common 2^target*T.
BlockSchedule schedule_cnot_block(unsigned target, unsigned control, unsigned num_qubits);

// Same block, generalized control set (empty = unconditional X by routing).
BlockSchedule schedule_swap_block(unsigned target, std::span<const unsigned> controls,
                                  unsigned num_qubits);

// One gate per pass, circuit order.  Controlled-U beyond the controlled-X
// family has no static-MZI schedule and raises UnsupportedError; `prepare`
// becomes the program's prep schedule; `measure` marks extraction.
OpticalProgram compile(const CircuitIR& ir, double bin_period_s = 1e-9);

// Greedily merges consecutive gates into one pass when their blocks appear
// in loop order and their qubit supports are disjoint.  Idempotent.
OpticalProgram pack_passes(const OpticalProgram& program);

// Loop-based single-photon preparation of `target`:
// t_j^2 = |a_j|^2 / (1 - sum_{k<j} |a_k|^2), phase_j = arg(a_j).
PrepSchedule prep_schedule(const QuditState& target);

// Static element inventory of the full N-qubit loop; every field is affine
// in N.
ElementCount count_elements(unsigned num_qubits);

// Elements a photon crosses while executing `program`: per pass, 9 in an
// active single-qubit block, 3 in an active CNOT block, 2 in a bypassed
// block.  Path-independent, so loss scales as transmission^count.
std::int64_t traversed_elements(const OpticalProgram& program);

}  // namespace qloop
