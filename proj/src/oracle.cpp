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

#include "qloop/oracle.hpp"

#include <random>

#include "qloop/bitops.hpp"
#include "qloop/errors.hpp"

namespace qloop::oracle {

namespace {

void check_width(unsigned num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxDenseQubits)
        throw RangeError("dense oracle limited to 1.." + std::to_string(kMaxDenseQubits)
                         + " qubits");
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

void check_unitary_dense(const Eigen::MatrixXcd& m) {
    const Eigen::Index d = m.rows();
    if (d != m.cols())
        throw DimensionError("unitary must be square");
    if (d < 2 || (d & (d - 1)) != 0)
        throw DimensionError("unitary dimension must be a power of two");
    const double tol = 1e-10;

    if (d <= 64) {
        const Eigen::MatrixXcd gram = m.adjoint() * m;
        if ((gram - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
            throw ValidationError("matrix is not unitary");
        return;
    }

    // Large lifted operators: column norms plus norm preservation on a few
    // seeded random vectors (the full Gram product is O(d^3)).
    for (Eigen::Index c = 0; c < d; ++c)
        if (std::abs(m.col(c).norm() - 1.0) > tol)
            throw ValidationError("matrix is not unitary (column norm)");
    std::mt19937_64 eng(0x5eedu);
    for (int k = 0; k < 4; ++k) {
        Eigen::VectorXcd v(d);
        for (Eigen::Index j = 0; j < d; ++j) {
            const double re = static_cast<double>(eng() >> 11) * 0x1.0p-53 - 0.5;
            const double im = static_cast<double>(eng() >> 11) * 0x1.0p-53 - 0.5;
            v(j) = Complex{re, im};
        }
        v.normalize();
        if (std::abs((m * v).norm() - 1.0) > tol)
            throw ValidationError("matrix is not unitary (norm test)");
    }
}

}  // namespace

DenseUnitary::DenseUnitary(Eigen::MatrixXcd m) : m_(std::move(m)) { check_unitary_dense(m_); }

DenseUnitary lift_single(const Mat2& u, unsigned qubit, unsigned num_qubits) {
    check_width(num_qubits);
    check_qubit(qubit, num_qubits);

    const auto eye = [](unsigned n) {
        const Eigen::Index d = Eigen::Index{1} << n;
        return Eigen::MatrixXcd::Identity(d, d);
    };
    return DenseUnitary(kron(eye(num_qubits - 1 - qubit), kron(u, eye(qubit))));
}

DenseUnitary lift_controlled(const Mat2& u, const std::vector<unsigned>& controls,
                             unsigned target, unsigned num_qubits) {
    check_width(num_qubits);
    check_qubit(target, num_qubits);
    std::uint64_t cmask = 0;
    for (unsigned c : controls) {
        check_qubit(c, num_qubits);
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (c == target || (cmask & bit))
            throw ValidationError("controls and target must be distinct");
        cmask |= bit;
    }

    const Eigen::Index d = Eigen::Index{1} << num_qubits;
    const std::uint64_t tbit = std::uint64_t{1} << target;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(d); ++j) {
        if ((j & cmask) != cmask || (j & tbit))
            continue;
        const std::uint64_t k = j | tbit;
        m(j, j) = u(0, 0);
        m(j, k) = u(0, 1);
        m(k, j) = u(1, 0);
        m(k, k) = u(1, 1);
    }
    return DenseUnitary(std::move(m));
}

QuditState apply(const DenseUnitary& u, const QuditState& state) {
    if (static_cast<std::uint64_t>(u.dim()) != state.size())
        throw DimensionError("operator/state dimension mismatch");
    Eigen::Map<const Eigen::VectorXcd> in(state.amplitudes().data(),
                                          static_cast<Eigen::Index>(state.size()));
    const Eigen::VectorXcd out = u.matrix() * in;
    std::vector<Complex> amps(out.data(), out.data() + out.size());
    return state.lossy() ? QuditState::sub_normalized(std::move(amps))
                         : QuditState::from_amplitudes(std::move(amps));
}

QuditState run_circuit(const CircuitIR& ir, const QuditState& input) {
    if (!ir.single_qudit())
        throw UnsupportedError("oracle runs single-qudit circuits only");
    if (ir.uses_spin_statements())
        throw UnsupportedError("oracle does not execute spin protocols");
    const unsigned n = ir.qudits.front().width;
    check_width(n);

    QuditState state = input;
    for (const auto& st : ir.statements) {
        if (const auto* g = std::get_if<GateStmt>(&st)) {
            state = apply(lift_single(statement_matrix(*g), g->qubit, n), state);
        } else if (const auto* g = std::get_if<CnotStmt>(&st)) {
            state = apply(lift_controlled(gate::X(), {g->control}, g->target, n), state);
        } else if (const auto* g = std::get_if<ToffoliStmt>(&st)) {
            state = apply(lift_controlled(gate::X(), {g->control_a, g->control_b}, g->target, n),
                          state);
        } else if (const auto* g = std::get_if<ControlledUStmt>(&st)) {
            state = apply(lift_controlled(cell_matrix(g->params), g->controls, g->target, n),
                          state);
        } else if (const auto* g = std::get_if<PrepareStmt>(&st)) {
            state = QuditState::from_amplitudes(g->amplitudes);
        } else if (std::holds_alternative<MeasureStmt>(st)) {
            // terminal readout marker; the final statevector is the result
        } else {
            throw UnsupportedError("statement kind not supported by the oracle");
        }
    }
    return state;
}

}  // namespace qloop::oracle
