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

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qloop/gates.hpp"
#include "qloop/matrix.hpp"
#include "qloop/qudit_state.hpp"
#include "qloop/rng.hpp"

namespace qloop {

// One cavity spin coupled to any number of qudits.  A bin reflected off the
// cavity picks up +1 for spin up and -1 for spin down; routing chosen bins
// onto the cavity therefore entangles them with the spin, and measuring the
// spin in the right basis realizes QND qubit readout and cross-qudit gates.

enum class SpinBasis { computational, rotated };
enum class SpinValue { up, down, plus, minus };

// Tensor of M qudits and the spin.  The spin is always the last (fastest)
// axis with component 0 = up; qudits keep their declaration order with the
// first as the high-order index block, matching tensor().
class JointState {
  public:
    JointState() = default;

    // Product of per-qudit states with spin `up` or `plus`.
    static JointState product(const std::vector<QuditState>& qudits, SpinValue spin);

    // General (possibly qudit-entangled) composite with a product spinor.
    static JointState from_parts(std::vector<unsigned> widths, std::vector<Complex> qudit_amps,
                                 std::array<Complex, 2> spin);

    // Fully general flat vector, spin axis last.
    static JointState from_flat(std::vector<unsigned> widths, std::vector<Complex> flat);

    const std::vector<unsigned>& widths() const { return widths_; }
    std::size_t num_qudits() const { return widths_.size(); }
    std::uint64_t qudit_dim() const;  // product of 2^width over all qudits

    // Product of the dimensions of all qudits after `qudit`.
    std::uint64_t stride(std::size_t qudit) const;
    // Bin index of `qudit` inside the joint index.
    std::uint64_t component(std::uint64_t joint, std::size_t qudit) const;

    Complex amp(std::uint64_t joint, int spin) const { return flat_[joint * 2 + spin]; }
    const std::vector<Complex>& flat() const { return flat_; }
    std::vector<Complex>& flat() { return flat_; }

    double norm() const;
    void require_normalized(double tol = kRuntimeNormTol) const;

    // The spin factor when the state is a product across the spin cut.
    std::optional<std::array<Complex, 2>> spin_factor(double tol = 1e-9) const;

    // Projects the (product) spin factor out and returns the normalized
    // composite qudit vector; throws ValidationError when the overlap resid-
    // ual shows the state is not a product with that spinor.
    std::vector<Complex> factor_spin(const std::array<Complex, 2>& spin,
                                     double tol = 1e-9) const;

    friend bool operator==(const JointState&, const JointState&) = default;

  private:
    std::vector<unsigned> widths_;
    std::vector<Complex> flat_;  // [joint * 2 + spin]
};

// Spin-conditioned reflection: amplitudes of the listed bins of one qudit
// flip sign on the spin-down branch.  Diagonal and self-inverse.
JointState reflect_bins(const JointState& state, std::size_t qudit,
                        const std::vector<std::uint64_t>& bins);

// Real rotation R(a) = [[cos(a/2), sin(a/2)], [-sin(a/2), cos(a/2)]] on the
// spin axis; R(pi/2) maps |+> to |up>.
JointState rotate_spin(const JointState& state, double angle);

struct SpinOutcome {
    SpinBasis basis;
    SpinValue value;
    double probability;   // of the realized outcome
    JointState collapsed;  // renormalized, spin axis reset to the outcome
};

SpinOutcome measure_spin(const JointState& state, SpinBasis basis, Rng& rng);

struct QndResult {
    int bit;  // measured value of the addressed qubit: + -> 0, - -> 1
    SpinOutcome spin;
};

// Non-destructive readout of one qubit: spin prepared in |+>, bins with the
// qubit bit set reflect off the cavity, spin measured in the rotated basis.
// The qudit collapses onto the measured bit value; repeating is determinis-
// tic.  A product spin that is not |+> is re-prepared; an entangled spin is
// an error.
QndResult qnd_measure_qubit(const JointState& state, std::size_t qudit, unsigned qubit,
                            Rng& rng);

struct CzResult {
    SpinOutcome outcome;
    JointState raw;        // post-measurement state before feed-forward
    JointState corrected;  // raw with the conditional local Z applied
};

// Cross-qudit controlled-Z between qubit m of qudit a and qubit n of qudit
// b: reflect the bit-m bins of a, rotate the spin by pi/2, reflect the bit-n
// bins of b, rotate back, measure the spin in the computational basis.  The
// down branch needs one local Z on qubit m of a (feed-forward), which
// `corrected` includes.
CzResult cross_qudit_cz(const JointState& state, std::size_t qudit_a, unsigned m,
                        std::size_t qudit_b, unsigned n, Rng& rng);

// Deterministic variant projecting onto the chosen branch (up/down); the
// reported probability is that branch's Born weight.
CzResult cross_qudit_cz_branch(const JointState& state, std::size_t qudit_a, unsigned m,
                               std::size_t qudit_b, unsigned n, SpinValue branch);

// Free-form protocol steps, enough to express the dedicated operations.
struct ReflectStep {
    std::size_t qudit;
    std::vector<std::uint64_t> bins;
};
struct RotateStep {
    double angle;
};
struct MeasureStep {
    SpinBasis basis;
};
struct PrepareSpinStep {
    SpinValue value;  // up or plus; requires a product spin
};
using ProtocolStep = std::variant<ReflectStep, RotateStep, MeasureStep, PrepareSpinStep>;

struct ProtocolResult {
    std::vector<SpinOutcome> outcomes;
    JointState state;
};

ProtocolResult run_protocol(const JointState& state, const std::vector<ProtocolStep>& steps,
                            Rng& rng);

// Local single-qubit gate / bin permutation on one qudit inside the joint
// state (spin untouched).
JointState apply_gate(const JointState& state, std::size_t qudit, unsigned qubit, const Mat2& u);
JointState apply_permutation(const JointState& state, std::size_t qudit,
                             const BinPermutation& perm);

// u on `target` of one qudit, applied where all `controls` bits read 1.
JointState apply_controlled(const JointState& state, std::size_t qudit,
                            const std::vector<unsigned>& controls, unsigned target,
                            const Mat2& u);

// Bins of `qudit` whose `qubit` bit is set (the reflection windows used by
// the protocols above).
std::vector<std::uint64_t> one_bins(unsigned width, unsigned qubit);

}  // namespace qloop
