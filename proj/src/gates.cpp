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

#include "qloop/gates.hpp"

#include <algorithm>
#include <cmath>

#include "qloop/bitops.hpp"
#include "qloop/errors.hpp"

namespace qloop {

bool BinPermutation::is_identity() const {
    for (std::uint64_t j = 0; j < mapping.size(); ++j)
        if (mapping[j] != j)
            return false;
    return true;
}

QuditState apply_gate_on_qubit(const QuditState& state, const Mat2& u, unsigned qubit) {
    const unsigned n = state.num_qubits();
    check_qubit(qubit, n);
    require_unitary(u, "apply_gate_on_qubit");
    state.require_normalized();

    const std::uint64_t d = state.size();
    const std::uint64_t step = std::uint64_t{1} << qubit;
    const std::uint64_t low_mask = step - 1;
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);

    QuditState out = state;
    auto& a = out.amplitudes();
    for (std::uint64_t k = 0; k < d / 2; ++k) {
        const std::uint64_t j0 = ((k & ~low_mask) << 1) | (k & low_mask);
        const std::uint64_t j1 = j0 | step;
        const Complex a0 = a[j0];
        const Complex a1 = a[j1];
        a[j0] = u00 * a0 + u01 * a1;
        a[j1] = u10 * a0 + u11 * a1;
    }
    return out;
}

BinPermutation cnot_permutation(unsigned num_qubits, unsigned control, unsigned target) {
    const unsigned ctrl[1] = {control};
    return controlled_x_permutation(num_qubits, ctrl, target);
}

BinPermutation toffoli_permutation(unsigned num_qubits, unsigned control_a, unsigned control_b,
                                   unsigned target) {
    const unsigned ctrl[2] = {control_a, control_b};
    return controlled_x_permutation(num_qubits, ctrl, target);
}

BinPermutation controlled_x_permutation(unsigned num_qubits, std::span<const unsigned> controls,
                                        unsigned target) {
    const std::uint64_t d = dim(num_qubits);
    check_qubit(target, num_qubits);
    std::uint64_t cmask = 0;
    for (unsigned c : controls) {
        check_qubit(c, num_qubits);
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (c == target || (cmask & bit))
            throw ValidationError("controls and target must be distinct");
        cmask |= bit;
    }

    BinPermutation perm{d, std::vector<std::uint64_t>(d)};
    const std::uint64_t tbit = std::uint64_t{1} << target;
    for (std::uint64_t j = 0; j < d; ++j)
        perm.mapping[j] = ((j & cmask) == cmask) ? (j ^ tbit) : j;
    return perm;
}

QuditState apply_permutation(const QuditState& state, const BinPermutation& perm) {
    if (perm.num_bins != state.size() || perm.mapping.size() != state.size())
        throw DimensionError("permutation/state dimension mismatch");

    std::vector<bool> hit(perm.num_bins, false);
    for (const std::uint64_t m : perm.mapping) {
        if (m >= perm.num_bins || hit[m])
            throw ValidationError("mapping is not a bijection on bins");
        hit[m] = true;
    }

    QuditState out = state;
    auto& a = out.amplitudes();
    for (std::uint64_t j = 0; j < perm.num_bins; ++j)
        a[perm.mapping[j]] = state.amplitudes()[j];
    return out;
}

QuditState controlled_u(const QuditState& state, std::span<const unsigned> controls,
                        unsigned target, const Mat2& u) {
    const unsigned n = state.num_qubits();
    check_qubit(target, n);
    require_unitary(u, "controlled_u");
    state.require_normalized();
    std::uint64_t cmask = 0;
    for (unsigned c : controls) {
        check_qubit(c, n);
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (c == target || (cmask & bit))
            throw ValidationError("controls and target must be distinct");
        cmask |= bit;
    }

    const std::uint64_t tbit = std::uint64_t{1} << target;
    QuditState out = state;
    auto& a = out.amplitudes();
    for (std::uint64_t j = 0; j < state.size(); ++j) {
        if ((j & cmask) != cmask || (j & tbit))
            continue;
        const std::uint64_t k = j | tbit;
        const Complex a0 = a[j];
        const Complex a1 = a[k];
        a[j] = u(0, 0) * a0 + u(0, 1) * a1;
        a[k] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return out;
}

MeasurementRecord measure_all(const QuditState& state, Rng& rng) {
    if (state.lossy())
        throw ValidationError("cannot measure a lossy (sub-normalized) state");
    state.require_normalized();

    const double u = rng.uniform();
    double cumulative = 0.0;
    std::uint64_t outcome = state.size() - 1;  // guard against rounding at the top
    for (std::uint64_t j = 0; j < state.size(); ++j) {
        cumulative += std::norm(state.amplitudes()[j]);
        if (u < cumulative) {
            outcome = j;
            break;
        }
    }
    return MeasurementRecord{outcome, std::norm(state.amplitudes()[outcome]),
                             QuditState::basis(state.num_qubits(), outcome)};
}

QuditState run_circuit(const CircuitIR& ir, std::optional<QuditState> input) {
    if (!ir.single_qudit())
        throw UnsupportedError("run_circuit executes single-qudit circuits only");
    if (ir.uses_spin_statements())
        throw UnsupportedError("run_circuit does not execute spin protocols");
    const unsigned n = ir.qudits.front().width;

    QuditState state = input ? std::move(*input) : QuditState::basis(n, 0);
    if (state.num_qubits() != n)
        throw DimensionError("input state width does not match the circuit");

    for (const auto& st : ir.statements) {
        if (const auto* g = std::get_if<GateStmt>(&st)) {
            state = apply_gate_on_qubit(state, statement_matrix(*g), g->qubit);
        } else if (const auto* g = std::get_if<CnotStmt>(&st)) {
            state = apply_permutation(state, cnot_permutation(n, g->control, g->target));
        } else if (const auto* g = std::get_if<ToffoliStmt>(&st)) {
            state = apply_permutation(
                state, toffoli_permutation(n, g->control_a, g->control_b, g->target));
        } else if (const auto* g = std::get_if<ControlledUStmt>(&st)) {
            state = controlled_u(state, g->controls, g->target, cell_matrix(g->params));
        } else if (const auto* g = std::get_if<PrepareStmt>(&st)) {
            if (input)
                continue;  // explicit input overrides the prepared target
            state = QuditState::from_amplitudes(g->amplitudes);
        } else if (std::holds_alternative<MeasureStmt>(st)) {
            // terminal readout marker; sampling happens elsewhere
        } else {
            throw UnsupportedError("statement kind not supported by run_circuit");
        }
    }
    return state;
}

}  // namespace qloop
