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

#include "qloop/random.hpp"

#include <cmath>
#include <numbers>

namespace qloop {

double gaussian(Rng& rng) {
    double u1 = rng.uniform();
    while (u1 == 0.0)
        u1 = rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<Complex> random_amplitudes(std::uint64_t length, Rng& rng) {
    std::vector<Complex> amps(length);
    for (auto& a : amps)
        a = Complex{gaussian(rng), gaussian(rng)};
    return amps;
}

QuditState random_state(unsigned num_qubits, Rng& rng) {
    return QuditState::from_amplitudes(random_amplitudes(dim(num_qubits), rng),
                                       /*auto_normalize=*/true);
}

Mat2 random_unitary(Rng& rng) {
    Eigen::Vector2cd c0{Complex{gaussian(rng), gaussian(rng)},
                        Complex{gaussian(rng), gaussian(rng)}};
    Eigen::Vector2cd c1{Complex{gaussian(rng), gaussian(rng)},
                        Complex{gaussian(rng), gaussian(rng)}};
    c0.normalize();
    c1 -= c0.dot(c1) * c0;
    c1.normalize();
    Mat2 u;
    u.col(0) = c0;
    u.col(1) = c1;
    return u;
}

}  // namespace qloop
