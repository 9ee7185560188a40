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

#include <cstdint>
#include <string>
#include <vector>

#include "qloop/compiler.hpp"

namespace qloop {

// Closed-form feasibility numbers for an N-qubit loop: bin count, storage
// loop size, element inventory, and success probabilities.  Never allocates
// state, so N can go far beyond what the simulator handles.

enum class HeraldModel {
    independent,  // mu independent attempts: 1 - (1 - eta)^mu
    poisson,      // Poissonian photon number:  1 - exp(-mu * eta)
};

struct ResourceConfig {
    unsigned num_qubits = 1;
    double bin_period_s = 1e-9;
    double group_velocity_mps = 2e8;
    double min_switch_window_s = 1e-10;
    double per_element_transmission = 1.0;
    double mean_photons = 1.0;  // mu at the heralded source
    HeraldModel herald_model = HeraldModel::independent;
    unsigned num_qudits = 1;  // M circuits whose joint success scales as eta^M
};

struct ResourceReport {
    std::uint64_t num_bins = 0;       // 2^N
    double loop_period_s = 0.0;       // num_bins * bin_period
    double fiber_length_m = 0.0;      // loop_period * group_velocity
    ElementCount elements{};
    std::int64_t elements_traversed = 0;        // exponent used for eta
    double single_circuit_transmission = 1.0;   // eta = t^elements_traversed
    double herald_probability = 1.0;
    double multi_qudit_success = 1.0;           // eta^M
    bool switch_window_ok = true;               // bin_period >= min window
    std::vector<std::string> notes;
};

// Success of one heralded injection given source strength mu and circuit
// transmission eta.
double herald_probability(double mu, double eta, HeraldModel model);

// All M qudit circuits must keep their photon: eta^M.
double multi_qudit_success(double eta, unsigned num_qudits);

// Pure arithmetic from the config; the traversal exponent comes from the
// static loop inventory (every element crossed once).
ResourceReport estimate(const ResourceConfig& cfg);

// Same, but the traversal exponent is counted from an actual compiled
// program (must agree with cfg.num_qubits).
ResourceReport estimate(const ResourceConfig& cfg, const OpticalProgram& program);

}  // namespace qloop
