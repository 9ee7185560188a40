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

#include "doctest.h"
#include "qloop/compiler.hpp"
#include "qloop/errors.hpp"
#include "qloop/json_io.hpp"
#include "qloop/parser.hpp"
#include "qloop/resources.hpp"

using namespace qloop;

TEST_CASE("a 20-qubit register fits one table-top loop") {
    ResourceConfig cfg;
    cfg.num_qubits = 20;
    cfg.bin_period_s = 1e-9;
    const ResourceReport rep = estimate(cfg);
    CHECK(rep.num_bins == 1048576);
    // 2^20 ns; powers of two are exact in binary floating point.
    CHECK(rep.loop_period_s == 1.048576e-3);
    CHECK(rep.fiber_length_m == 2.097152e5);
    CHECK(rep.fiber_length_m >= 2.0e5);
    CHECK(rep.elements.total() == 286);
    CHECK(rep.elements.switches == 84);
    CHECK(rep.elements.delay_lines == 81);
    CHECK(rep.elements.phase_shifters == 81);
    CHECK(rep.elements.beamsplitters == 40);
    CHECK(rep.elements.distinct_delay_values == 20);
    CHECK(rep.switch_window_ok);
}

TEST_CASE("small-register numbers stay human-sized") {
    ResourceConfig cfg;
    cfg.num_qubits = 1;
    const ResourceReport rep = estimate(cfg);
    CHECK(rep.num_bins == 2);
    CHECK(rep.loop_period_s == doctest::Approx(2e-9));
    CHECK(rep.fiber_length_m == doctest::Approx(0.4));
    CHECK(rep.elements.total() == 20);
}

TEST_CASE("transmission 1 means certain heralding for mu >= 1") {
    ResourceConfig cfg;
    cfg.num_qubits = 2;
    cfg.per_element_transmission = 1.0;
    cfg.mean_photons = 1.0;
    const ResourceReport rep = estimate(cfg);
    CHECK(rep.single_circuit_transmission == doctest::Approx(1.0));
    CHECK(rep.herald_probability == doctest::Approx(1.0));
}

TEST_CASE("herald models pin their closed forms") {
    CHECK(herald_probability(1.0, 0.5, HeraldModel::independent) == doctest::Approx(0.5));
    CHECK(herald_probability(10.0, 0.1, HeraldModel::poisson) ==
          doctest::Approx(0.6321205588285577).epsilon(1e-12));
    CHECK(herald_probability(0.0, 0.9, HeraldModel::independent) == doctest::Approx(0.0));
    CHECK(multi_qudit_success(0.9, 2) == doctest::Approx(0.81));
    CHECK(multi_qudit_success(0.35, 1) == doctest::Approx(0.35));
}

TEST_CASE("per-program traversal count feeds the transmission estimate") {
    const ParseResult r = parse("qudit q 2\ngate H q[0]\ncnot q[0] q[1]\n");
    REQUIRE(r.ok());
    const OpticalProgram prog = compile(*r.circuit);

    ResourceConfig cfg;
    cfg.num_qubits = 2;
    cfg.per_element_transmission = 0.999;
    const ResourceReport rep = estimate(cfg, prog);
    CHECK(rep.elements_traversed == 24);
    CHECK(rep.single_circuit_transmission == doctest::Approx(std::pow(0.999, 24)));

    cfg.num_qubits = 3;
    CHECK_THROWS_AS(estimate(cfg, prog), DimensionError);
}

TEST_CASE("too-short bins trip the switch-window check") {
    ResourceConfig cfg;
    cfg.num_qubits = 4;
    cfg.bin_period_s = 5e-11;
    cfg.min_switch_window_s = 1e-10;
    const ResourceReport rep = estimate(cfg);
    CHECK_FALSE(rep.switch_window_ok);
}

TEST_CASE("element inventory grows linearly in the register width") {
    for (unsigned n = 2; n + 1 <= 24; ++n) {
        const ResourceReport a = [&] { ResourceConfig c; c.num_qubits = n - 1; return estimate(c); }();
        const ResourceReport b = [&] { ResourceConfig c; c.num_qubits = n; return estimate(c); }();
        const ResourceReport c = [&] { ResourceConfig d; d.num_qubits = n + 1; return estimate(d); }();
        CHECK((c.elements.total() - b.elements.total()) ==
              (b.elements.total() - a.elements.total()));
    }
}

TEST_CASE("configs outside the physical envelope are rejected") {
    const auto with = [](auto mutate) {
        ResourceConfig cfg;
        mutate(cfg);
        return cfg;
    };
    CHECK_THROWS_AS(estimate(with([](ResourceConfig& c) { c.num_qubits = 0; })), RangeError);
    CHECK_THROWS_AS(estimate(with([](ResourceConfig& c) { c.num_qubits = 63; })), RangeError);
    CHECK_THROWS_AS(estimate(with([](ResourceConfig& c) { c.per_element_transmission = 1.5; })),
                    RangeError);
    CHECK_THROWS_AS(estimate(with([](ResourceConfig& c) { c.per_element_transmission = -0.1; })),
                    RangeError);
    CHECK_THROWS_AS(estimate(with([](ResourceConfig& c) { c.num_qudits = 0; })), RangeError);
    CHECK_THROWS_AS(estimate(with([](ResourceConfig& c) { c.mean_photons = -1.0; })), RangeError);
    CHECK_THROWS_AS(estimate(with([](ResourceConfig& c) { c.bin_period_s = 0.0; })), RangeError);
}

TEST_CASE("resource reports serialize to JSON") {
    ResourceConfig cfg;
    cfg.num_qubits = 3;
    cfg.per_element_transmission = 0.99;
    cfg.num_qudits = 2;
    const ResourceReport rep = estimate(cfg);
    const nlohmann::json j = resources_to_json(rep);
    CHECK(j["num_bins"] == 8);
    CHECK(j["elements"]["total"] == rep.elements.total());
    CHECK(j["herald_probability"].get<double>() == doctest::Approx(rep.herald_probability));
    CHECK_FALSE(j["notes"].empty());
}
