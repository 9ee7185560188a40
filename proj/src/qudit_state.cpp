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

#include "qloop/qudit_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

unsigned width_for_length(std::size_t len) {
    if (len < 2 || !std::has_single_bit(len))
        throw DimensionError("amplitude vector length " + std::to_string(len)
                             + " is not a power of two >= 2");
    const unsigned n = static_cast<unsigned>(std::bit_width(len) - 1);
    dim(n);  // enforce the register-width cap
    return n;
}

double squared_norm(const std::vector<Complex>& amps) {
    double s = 0.0;
    for (const auto& a : amps)
        s += std::norm(a);
    return s;
}

}  // namespace

QuditState QuditState::basis(unsigned num_qubits, std::uint64_t j) {
    const std::uint64_t d = dim(num_qubits);
    check_bin(j, num_qubits);
    std::vector<Complex> amps(d, Complex{0.0, 0.0});
    amps[j] = Complex{1.0, 0.0};
    return QuditState(num_qubits, std::move(amps), false);
}

QuditState QuditState::from_amplitudes(std::vector<Complex> amps, bool auto_normalize) {
    const unsigned n = width_for_length(amps.size());
    const double sq = squared_norm(amps);
    if (sq == 0.0)
        throw ValidationError("amplitude vector is identically zero");
    const double norm = std::sqrt(sq);
    if (auto_normalize) {
        for (auto& a : amps)
            a /= norm;
    } else if (std::abs(norm - 1.0) > kConstructNormTol) {
        throw ValidationError("amplitude vector norm " + std::to_string(norm)
                              + " deviates from 1 beyond tolerance");
    }
    return QuditState(n, std::move(amps), false);
}

QuditState QuditState::sub_normalized(std::vector<Complex> amps) {
    const unsigned n = width_for_length(amps.size());
    const double sq = squared_norm(amps);
    if (sq > 1.0 + kConstructNormTol)
        throw ValidationError("sub-normalized state has squared norm > 1");
    return QuditState(n, std::move(amps), true);
}

Complex QuditState::amp(std::uint64_t j) const {
    check_bin(j, num_qubits_);
    return amps_[j];
}

double QuditState::norm() const { return std::sqrt(squared_norm(amps_)); }

void QuditState::require_normalized(double tol) const {
    if (lossy_)
        return;
    if (std::abs(squared_norm(amps_) - 1.0) > tol)
        throw ValidationError("state is not normalized");
}

StateComparison equal_up_to_global_phase(const QuditState& a, const QuditState& b) {
    if (a.size() != b.size())
        throw DimensionError("cannot compare states of different dimension");

    Complex overlap{0.0, 0.0};
    for (std::uint64_t j = 0; j < a.size(); ++j)
        overlap += std::conj(b.amplitudes()[j]) * a.amplitudes()[j];

    Complex phase{1.0, 0.0};
    if (std::abs(overlap) > 1e-300)
        phase = overlap / std::abs(overlap);

    double max_diff = 0.0;
    for (std::uint64_t j = 0; j < a.size(); ++j)
        max_diff = std::max(max_diff, std::abs(a.amplitudes()[j] - phase * b.amplitudes()[j]));
    return StateComparison{max_diff, phase};
}

QuditState tensor(const QuditState& a, const QuditState& b) {
    if (a.size() == 0 || b.size() == 0)
        throw DimensionError("cannot tensor an empty state");
    dim(a.num_qubits() + b.num_qubits());  // combined width must stay under the cap

    std::vector<Complex> amps(a.size() * b.size());
    for (std::uint64_t ja = 0; ja < a.size(); ++ja)
        for (std::uint64_t jb = 0; jb < b.size(); ++jb)
            amps[ja * b.size() + jb] = a.amplitudes()[ja] * b.amplitudes()[jb];

    const bool lossy = a.lossy() || b.lossy();
    return lossy ? QuditState::sub_normalized(std::move(amps))
                 : QuditState::from_amplitudes(std::move(amps));
}

}  // namespace qloop
