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

#include <cmath>
#include <complex>

#include "doctest.h"
#include "qloop/errors.hpp"
#include "qloop/qudit_state.hpp"
#include "qloop/random.hpp"

using namespace qloop;

TEST_CASE("basis states and constructors") {
    const QuditState s = QuditState::basis(2, 3);
    CHECK(s.num_qubits() == 2);
    CHECK(s.size() == 4);
    CHECK(s.amp(3) == Complex{1.0, 0.0});
    CHECK(s.amp(0) == Complex{0.0, 0.0});
    CHECK_FALSE(s.lossy());
    CHECK_THROWS_AS(QuditState::basis(2, 4), RangeError);
    CHECK_THROWS_AS(s.amp(4), RangeError);
}

TEST_CASE("from_amplitudes enforces shape and norm") {
    CHECK_THROWS_AS(QuditState::from_amplitudes({{1, 0}, {0, 0}, {0, 0}}), DimensionError);
    CHECK_THROWS_AS(QuditState::from_amplitudes({{1, 0}}), DimensionError);
    CHECK_THROWS_AS(QuditState::from_amplitudes({{0.5, 0}, {0.5, 0}}), ValidationError);
    const QuditState s = QuditState::from_amplitudes({{0.5, 0}, {0.5, 0}}, true);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s.amp(0) - Complex{r, 0}) < 1e-15);
    CHECK_THROWS_AS(QuditState::from_amplitudes({{0, 0}, {0, 0}}, true), ValidationError);
}

TEST_CASE("lossy states skip the norm assertion") {
    const QuditState s = QuditState::sub_normalized({{0.5, 0}, {0.0, 0}});
    CHECK(s.lossy());
    CHECK(s.norm() == doctest::Approx(0.5));
    s.require_normalized();  // tolerated because the loss is declared
    CHECK_THROWS_AS(QuditState::sub_normalized({{2.0, 0}, {0.0, 0}}), ValidationError);
}

TEST_CASE("global-phase comparison") {
    Rng rng(11);
    const QuditState a = random_state(3, rng);
    std::vector<Complex> rotated = a.amplitudes();
    const Complex phase = std::polar(1.0, 1.234);
    for (Complex& c : rotated) c *= phase;
    const QuditState b = QuditState::from_amplitudes(rotated);
    const StateComparison cmp = equal_up_to_global_phase(a, b);
    CHECK(cmp.max_abs_diff < 1e-12);
    CHECK(std::abs(cmp.global_phase - std::conj(phase)) < 1e-12);
    CHECK(approx_equal_phase(a, b, 1e-12));

    const QuditState e0 = QuditState::basis(1, 0);
    const QuditState e1 = QuditState::basis(1, 1);
    CHECK(equal_up_to_global_phase(e0, e1).max_abs_diff == doctest::Approx(1.0));
    CHECK_THROWS_AS(equal_up_to_global_phase(e0, QuditState::basis(2, 0)), DimensionError);
}

TEST_CASE("tensor puts the first factor in the high bits") {
    const QuditState t = tensor(QuditState::basis(1, 1), QuditState::basis(1, 0));
    CHECK(t.num_qubits() == 2);
    CHECK(t.amp(2) == Complex{1.0, 0.0});

    const double r = 1.0 / std::sqrt(2.0);
    const QuditState plus = QuditState::from_amplitudes({{r, 0}, {r, 0}});
    const QuditState tp = tensor(plus, QuditState::basis(1, 1));
    CHECK(std::abs(tp.amp(1) - Complex{r, 0}) < 1e-15);
    CHECK(std::abs(tp.amp(3) - Complex{r, 0}) < 1e-15);
    CHECK(std::abs(tp.amp(0)) < 1e-15);
}
