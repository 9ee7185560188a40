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

#include "qloop/matrix.hpp"
#include "qloop/qudit_state.hpp"
#include "qloop/rng.hpp"

namespace qloop {

// Standard normal via Box-Muller on the pinned uniform stream, so sampled
// states are platform-stable (std::normal_distribution is not).
double gaussian(Rng& rng);

// Haar-ish random state: i.i.d. complex Gaussian amplitudes, normalized.
QuditState random_state(unsigned num_qubits, Rng& rng);

std::vector<Complex> random_amplitudes(std::uint64_t length, Rng& rng);

// Random U(2): Gram-Schmidt on a complex Gaussian 2x2.
Mat2 random_unitary(Rng& rng);

}  // namespace qloop
