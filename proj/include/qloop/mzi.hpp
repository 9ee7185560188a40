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

#include "qloop/matrix.hpp"

namespace qloop {

// Phase settings of one tunable Mach-Zehnder cell.  theta sits on one
// internal arm between the two beamsplitters, phi on input port 0, psi0/psi1
// on the output ports.  theta in [0, pi]; the others in [0, 2*pi).
struct GateParams {
    double theta;
    double phi;
    double psi0;
    double psi1;

    friend bool operator==(const GateParams&, const GateParams&) = default;
};

// Symmetric 50:50 beamsplitter (1/sqrt2) [[1, i], [i, 1]].
Mat2 bs_matrix();

// Full cell: diag(e^{i psi0}, e^{i psi1}) * BS * diag(e^{i theta}, 1) * BS *
// diag(e^{i phi}, 1).  The inner BS-phase-BS block collapses to
// i e^{i theta/2} [[e^{i phi} sin(theta/2), cos(theta/2)],
//                  [e^{i phi} cos(theta/2), -sin(theta/2)]].
Mat2 cell_matrix(const GateParams& p);

// Inverts cell_matrix for any U(2): theta from |U00| = sin(theta/2), the
// phases from entry arguments.  At the degenerate points theta in {0, pi}
// phi is unobservable and pinned to 0.  Throws ValidationError when u is not
// unitary within 1e-10.
GateParams decompose(const Mat2& u);

}  // namespace qloop
