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

#include <optional>
#include <span>
#include <vector>

#include "qloop/circuit.hpp"
#include "qloop/matrix.hpp"
#include "qloop/qudit_state.hpp"
#include "qloop/rng.hpp"

namespace qloop {

// Gate semantics by index arithmetic on the time-bin register: a single-qubit
// gate is the same 2x2 applied to every (j, j + 2^i) amplitude pair, a CNOT
// is a pairwise bin swap.  No matrices are ever built here; the dense oracle
// checks these kernels from the other direction.

// Bijection on bins; mapping[j] is where bin j's amplitude goes:
// out[mapping[j]] = in[j].
struct BinPermutation {
    std::uint64_t num_bins;
    std::vector<std::uint64_t> mapping;

    bool is_identity() const;

    friend bool operator==(const BinPermutation&, const BinPermutation&) = default;
};

struct MeasurementRecord {
    std::uint64_t outcome;
    double probability;
    QuditState collapsed;
};

// u across all pairs (j, j + 2^qubit), j in Z_qubit, ascending j.
QuditState apply_gate_on_qubit(const QuditState& state, const Mat2& u, unsigned qubit);

// Swap j <-> j + 2^target exactly where bit `control` of j is 1.
BinPermutation cnot_permutation(unsigned num_qubits, unsigned control, unsigned target);

// Swap j <-> j + 2^target where both control bits are 1.
BinPermutation toffoli_permutation(unsigned num_qubits, unsigned control_a, unsigned control_b,
                                   unsigned target);

// Generalized controls (possibly none, giving plain X on `target`).
BinPermutation controlled_x_permutation(unsigned num_qubits, std::span<const unsigned> controls,
                                        unsigned target);

QuditState apply_permutation(const QuditState& state, const BinPermutation& perm);

// u on `target` restricted to bins whose control bits all read 1.
QuditState controlled_u(const QuditState& state, std::span<const unsigned> controls,
                        unsigned target, const Mat2& u);

// Projective readout of the full register by inverse-CDF sampling over the
// cumulative |amp|^2 distribution.  Requires a normalized (non-lossy) state.
MeasurementRecord measure_all(const QuditState& state, Rng& rng);

// Executes a single-qudit, spin-free circuit with the kernels above.  The
// optional input overrides a leading `prepare`; with neither, |bin 0>.
QuditState run_circuit(const CircuitIR& ir, std::optional<QuditState> input = std::nullopt);

}  // namespace qloop
