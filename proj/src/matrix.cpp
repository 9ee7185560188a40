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

#include "qloop/matrix.hpp"

#include <cmath>
#include <numbers>

#include "qloop/errors.hpp"

namespace qloop {

bool is_unitary(const Mat2& u, double tol) {
    const Mat2 gram = u.adjoint() * u;
    return (gram - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

void require_unitary(const Mat2& u, const char* what, double tol) {
    if (!is_unitary(u, tol))
        throw ValidationError(std::string(what) + ": matrix is not unitary");
}

namespace gate {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Mat2 I() { return Mat2::Identity(); }

Mat2 X() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Mat2 Y() {
    Mat2 m;
    m << 0, -kI, kI, 0;
    return m;
}

Mat2 Z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

Mat2 H() {
    Mat2 m;
    const double s = 1.0 / std::numbers::sqrt2;
    m << s, s, s, -s;
    return m;
}

Mat2 S() {
    Mat2 m;
    m << 1, 0, 0, kI;
    return m;
}

Mat2 SDG() {
    Mat2 m;
    m << 1, 0, 0, -kI;
    return m;
}

Mat2 TG() {
    Mat2 m;
    m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
    return m;
}

std::optional<Mat2> by_name(std::string_view name) {
    if (name == "X")
        return X();
    if (name == "Y")
        return Y();
    if (name == "Z")
        return Z();
    if (name == "H")
        return H();
    if (name == "S")
        return S();
    if (name == "SDG")
        return SDG();
    if (name == "TG")
        return TG();
    return std::nullopt;
}

}  // namespace gate
}  // namespace qloop
