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

#include <vector>

#include "qloop/circuit.hpp"
#include "qloop/matrix.hpp"
#include "qloop/qudit_state.hpp"

namespace qloop::oracle {

// Brute-force reference semantics on explicit 2^N x 2^N matrices.  This is
// deliberately a different algorithm from the index-arithmetic kernels in
// gates.hpp — lifted operators are built as full Kronecker products / direct
// sums and applied by dense matrix-vector multiplication — so the two paths
// can check each other without sharing code.

inline constexpr unsigned kMaxDenseQubits = 12;

class DenseUnitary {
  public:
    // Verifies unitarity on construction: an exact Gram check up to dim 64;
    // above that (the full check is O(d^3)) column norms plus norm
    // preservation on seeded random vectors, all at tolerance 1e-10.
    explicit DenseUnitary(Eigen::MatrixXcd m);

    const Eigen::MatrixXcd& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

  private:
    Eigen::MatrixXcd m_;
};

// I^{(N-1-qubit)} (x) u (x) I^{(qubit)} with qubit 0 the least-significant
// Kronecker factor.
DenseUnitary lift_single(const Mat2& u, unsigned qubit, unsigned num_qubits);

// u on `target` where every control bit reads 1; identity elsewhere (direct
// sum structure).  Controls and target must be distinct.
DenseUnitary lift_controlled(const Mat2& u, const std::vector<unsigned>& controls,
                             unsigned target, unsigned num_qubits);

QuditState apply(const DenseUnitary& u, const QuditState& state);

// Executes gate statements of a single-qudit circuit by lifted dense
// matrices.  A leading `prepare` replaces the input; `measure` is a terminal
// no-op; spin-protocol statements raise UnsupportedError.
QuditState run_circuit(const CircuitIR& ir, const QuditState& input);

}  // namespace qloop::oracle
