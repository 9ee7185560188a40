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

#include "qloop/resources.hpp"

#include <cmath>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

void check_config(const ResourceConfig& cfg) {
    if (cfg.num_qubits == 0 || cfg.num_qubits > 62) {
        throw RangeError("register width out of range (1..62)");
    }
    if (cfg.bin_period_s <= 0.0 || cfg.group_velocity_mps <= 0.0 ||
        cfg.min_switch_window_s <= 0.0) {
        throw RangeError("periods and velocities must be positive");
    }
    if (cfg.per_element_transmission < 0.0 || cfg.per_element_transmission > 1.0) {
        throw RangeError("per-element transmission must lie in [0, 1]");
    }
    if (cfg.mean_photons < 0.0) {
        throw RangeError("mean photon number must be nonnegative");
    }
    if (cfg.num_qudits == 0) {
        throw RangeError("at least one qudit circuit required");
    }
}

ResourceReport build(const ResourceConfig& cfg, std::int64_t traversed) {
    ResourceReport rep;
    rep.num_bins = std::uint64_t{1} << cfg.num_qubits;
    rep.loop_period_s = static_cast<double>(rep.num_bins) * cfg.bin_period_s;
    rep.fiber_length_m = rep.loop_period_s * cfg.group_velocity_mps;
    rep.elements = count_elements(cfg.num_qubits);
    rep.elements_traversed = traversed;
    rep.single_circuit_transmission =
        std::pow(cfg.per_element_transmission, static_cast<double>(traversed));
    rep.herald_probability =
        herald_probability(cfg.mean_photons, rep.single_circuit_transmission, cfg.herald_model);
    rep.multi_qudit_success =
        multi_qudit_success(rep.single_circuit_transmission, cfg.num_qudits);
    rep.switch_window_ok = cfg.bin_period_s >= cfg.min_switch_window_s;
    rep.notes.push_back(cfg.herald_model == HeraldModel::independent
                            ? "herald model: independent attempts"
                            : "herald model: Poissonian photon number");
    rep.notes.push_back(
        "active phase stabilization of the delay fibers is assumed, not modeled");
    return rep;
}

}  // namespace

double herald_probability(double mu, double eta, HeraldModel model) {
    if (mu < 0.0) {
        throw RangeError("mean photon number must be nonnegative");
    }
    if (eta < 0.0 || eta > 1.0) {
        throw RangeError("transmission must lie in [0, 1]");
    }
    if (model == HeraldModel::poisson) {
        return 1.0 - std::exp(-mu * eta);
    }
    return 1.0 - std::pow(1.0 - eta, mu);
}

double multi_qudit_success(double eta, unsigned num_qudits) {
    if (eta < 0.0 || eta > 1.0) {
        throw RangeError("transmission must lie in [0, 1]");
    }
    if (num_qudits == 0) {
        throw RangeError("at least one qudit circuit required");
    }
    return std::pow(eta, static_cast<double>(num_qudits));
}

ResourceReport estimate(const ResourceConfig& cfg) {
    check_config(cfg);
    return build(cfg, count_elements(cfg.num_qubits).total());
}

ResourceReport estimate(const ResourceConfig& cfg, const OpticalProgram& program) {
    check_config(cfg);
    if (program.num_qubits != cfg.num_qubits) {
        throw DimensionError("program width does not match the resource config");
    }
    return build(cfg, traversed_elements(program));
}

}  // namespace qloop
