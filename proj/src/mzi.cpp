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

#include "qloop/mzi.hpp"

#include <cmath>
#include <numbers>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wrap into [0, 2*pi).
double mod_two_pi(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0)
        a += kTwoPi;
    if (a == kTwoPi)  // fmod can land exactly on the boundary
        a = 0.0;
    return a;
}

// sin/cos of theta/2 collapse to exactly 0 below this; phi is then
// unobservable and pinned to 0 for determinism.
constexpr double kDegenerateTol = 1e-12;

}  // namespace

Mat2 bs_matrix() {
    Mat2 m;
    const double s = 1.0 / std::numbers::sqrt2;
    m << s, s * kI, s * kI, s;
    return m;
}

Mat2 cell_matrix(const GateParams& p) {
    Mat2 in_phase = Mat2::Identity();
    in_phase(0, 0) = std::polar(1.0, p.phi);
    Mat2 arm_phase = Mat2::Identity();
    arm_phase(0, 0) = std::polar(1.0, p.theta);
    Mat2 out_phase;
    out_phase << std::polar(1.0, p.psi0), 0, 0, std::polar(1.0, p.psi1);
    return out_phase * bs_matrix() * arm_phase * bs_matrix() * in_phase;
}

GateParams decompose(const Mat2& u) {
    require_unitary(u, "decompose");

    const double s = std::abs(u(0, 0));  // sin(theta/2)
    const double c = std::abs(u(0, 1));  // cos(theta/2)
    // atan2 keeps full precision at both ends of the range; asin(|u00|)
    // would lose half the digits as theta approaches pi.
    const double theta = 2.0 * std::atan2(s, c);
    const double half = theta / 2.0;

    double phi = 0.0;
    double psi0 = 0.0;
    double psi1 = 0.0;

    if (s < kDegenerateTol) {
        // theta = 0: cell = i e^{i psi} on the anti-diagonal.
        psi0 = std::arg(u(0, 1)) - kPi / 2.0;
        psi1 = std::arg(u(1, 0)) - kPi / 2.0;
    } else if (c < kDegenerateTol) {
        // theta = pi: cell = diag(-e^{i psi0}, e^{i psi1}).
        psi0 = std::arg(-u(0, 0));
        psi1 = std::arg(u(1, 1));
    } else {
        // Generic: U01 = i e^{i(psi0 + theta/2)} c, U00 = e^{i phi} (s/c) U01,
        // U10 = i e^{i(psi1 + theta/2 + phi)} c, U11 = -i e^{i(psi1 + theta/2)} s.
        phi = std::arg(u(0, 0) * std::conj(u(0, 1)));
        psi0 = std::arg(u(0, 1)) - half - kPi / 2.0;
        // Take psi1 from whichever row-1 entry is larger: the phase of a
        // near-zero entry is noisy, and through psi1 that noise would land
        // on the large entry of the reconstruction.
        if (s >= c)
            psi1 = std::arg(-u(1, 1)) - half - kPi / 2.0;
        else
            psi1 = std::arg(u(1, 0)) - half - kPi / 2.0 - phi;
    }

    return GateParams{theta, mod_two_pi(phi), mod_two_pi(psi0), mod_two_pi(psi1)};
}

}  // namespace qloop
