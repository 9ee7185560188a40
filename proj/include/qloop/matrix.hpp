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

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string_view>

namespace qloop {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

inline constexpr double kUnitaryTol = 1e-10;

bool is_unitary(const Mat2& u, double tol = kUnitaryTol);

// Throws ValidationError when u is not unitary within tol.
void require_unitary(const Mat2& u, const char* what, double tol = kUnitaryTol);

// The fixed single-qubit gate vocabulary.  TG is the pi/8 gate diag(1,
// exp(i pi/4)); SDG is the inverse of S.
namespace gate {
Mat2 I();
Mat2 X();
Mat2 Y();
Mat2 Z();
Mat2 H();
Mat2 S();
Mat2 SDG();
Mat2 TG();

// Lookup by DSL mnemonic; empty when the name is not in the vocabulary.
std::optional<Mat2> by_name(std::string_view name);
}  // namespace gate

}  // namespace qloop
