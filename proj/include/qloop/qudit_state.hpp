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

#include <complex>
#include <cstdint>
#include <vector>

#include "qloop/bitops.hpp"

namespace qloop {

using Complex = std::complex<double>;

// Construction rejects amplitude vectors whose norm is off by more than this
// unless auto-normalization is requested.
inline constexpr double kConstructNormTol = 1e-6;
// Runtime normalization assertions (gates, protocols) use this.
inline constexpr double kRuntimeNormTol = 1e-9;

// Statevector of one photonic qudit: amplitude amps()[j] rides in time bin j.
// Value-semantic; every operation returns a fresh state.  A state may be
// sub-normalized only when it was produced by a lossy channel, which sets the
// lossy flag; all unitary ops tolerate that, measurements refuse it.
class QuditState {
  public:
    QuditState() = default;

    static QuditState basis(unsigned num_qubits, std::uint64_t j);

    // Length must be a power of two >= 2.  With auto_normalize the vector is
    // rescaled (zero vectors still rejected); otherwise the norm must be
    // within kConstructNormTol of one.
    static QuditState from_amplitudes(std::vector<Complex> amps, bool auto_normalize = false);

    // Loss path: norm may be anywhere in (0, 1 + tol]; marks the state lossy.
    static QuditState sub_normalized(std::vector<Complex> amps);

    unsigned num_qubits() const { return num_qubits_; }
    std::uint64_t size() const { return amps_.size(); }
    bool lossy() const { return lossy_; }

    Complex amp(std::uint64_t j) const;
    const std::vector<Complex>& amplitudes() const { return amps_; }
    std::vector<Complex>& amplitudes() { return amps_; }

    double norm() const;

    // Throws ValidationError when the squared norm is off by more than tol
    // and the state is not flagged lossy.
    void require_normalized(double tol = kRuntimeNormTol) const;

  private:
    QuditState(unsigned num_qubits, std::vector<Complex> amps, bool lossy)
        : num_qubits_(num_qubits), amps_(std::move(amps)), lossy_(lossy) {}

    unsigned num_qubits_ = 0;
    std::vector<Complex> amps_;
    bool lossy_ = false;
};

struct StateComparison {
    double max_abs_diff;   // max_j |a_j - phase * b_j|
    Complex global_phase;  // unit phase applied to the second argument
};

// Best unit phase is taken from the overlap <b|a>; orthogonal states fall
// back to phase 1 and report the raw difference.
StateComparison equal_up_to_global_phase(const QuditState& a, const QuditState& b);

inline bool approx_equal_phase(const QuditState& a, const QuditState& b, double tol) {
    return equal_up_to_global_phase(a, b).max_abs_diff <= tol;
}

// Kronecker product; the first factor becomes the high-order index block:
// result[ja * b.size() + jb] = a[ja] * b[jb].
QuditState tensor(const QuditState& a, const QuditState& b);

}  // namespace qloop
