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

#include "qloop/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

std::array<Complex, 2> spinor_of(SpinValue v) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (v) {
        case SpinValue::up:
            return {Complex(1.0, 0.0), Complex(0.0, 0.0)};
        case SpinValue::down:
            return {Complex(0.0, 0.0), Complex(1.0, 0.0)};
        case SpinValue::plus:
            return {Complex(r, 0.0), Complex(r, 0.0)};
        case SpinValue::minus:
            return {Complex(r, 0.0), Complex(-r, 0.0)};
    }
    throw ValidationError("unknown spin value");
}

void check_qudit_index(const JointState& s, std::size_t qudit) {
    if (qudit >= s.num_qudits()) {
        throw RangeError("qudit index out of range");
    }
}

}  // namespace

JointState JointState::product(const std::vector<QuditState>& qudits, SpinValue spin) {
    if (qudits.empty()) {
        throw DimensionError("joint state needs at least one qudit");
    }
    std::vector<unsigned> widths;
    std::vector<Complex> amps{Complex(1.0, 0.0)};
    for (const QuditState& q : qudits) {
        if (q.lossy()) {
            throw ValidationError("cannot build a joint state from a lossy qudit");
        }
        q.require_normalized();
        widths.push_back(q.num_qubits());
        std::vector<Complex> next;
        next.reserve(amps.size() * q.size());
        for (const Complex& a : amps) {
            for (std::uint64_t j = 0; j < q.size(); ++j) {
                next.push_back(a * q.amp(j));
            }
        }
        amps = std::move(next);
    }
    return from_parts(std::move(widths), std::move(amps), spinor_of(spin));
}

JointState JointState::from_parts(std::vector<unsigned> widths, std::vector<Complex> qudit_amps,
                                  std::array<Complex, 2> spin) {
    const double sn = std::sqrt(std::norm(spin[0]) + std::norm(spin[1]));
    if (sn < 1e-12) {
        throw ValidationError("spin factor must be nonzero");
    }
    spin[0] /= sn;
    spin[1] /= sn;
    std::vector<Complex> flat;
    flat.reserve(qudit_amps.size() * 2);
    for (const Complex& a : qudit_amps) {
        flat.push_back(a * spin[0]);
        flat.push_back(a * spin[1]);
    }
    return from_flat(std::move(widths), std::move(flat));
}

JointState JointState::from_flat(std::vector<unsigned> widths, std::vector<Complex> flat) {
    if (widths.empty()) {
        throw DimensionError("joint state needs at least one qudit");
    }
    std::uint64_t d = 1;
    for (unsigned w : widths) {
        if (w == 0) {
            throw DimensionError("qudit width must be positive");
        }
        d *= dim(w);
    }
    if (flat.size() != d * 2) {
        throw DimensionError("flat amplitude vector has the wrong length");
    }
    JointState s;
    s.widths_ = std::move(widths);
    s.flat_ = std::move(flat);
    const double n = s.norm();
    if (std::abs(n - 1.0) > kConstructNormTol) {
        throw ValidationError("joint state is not normalized");
    }
    for (Complex& a : s.flat_) {
        a /= n;
    }
    return s;
}

std::uint64_t JointState::qudit_dim() const {
    std::uint64_t d = 1;
    for (unsigned w : widths_) {
        d *= dim(w);
    }
    return d;
}

std::uint64_t JointState::stride(std::size_t qudit) const {
    check_qudit_index(*this, qudit);
    std::uint64_t s = 1;
    for (std::size_t k = qudit + 1; k < widths_.size(); ++k) {
        s *= dim(widths_[k]);
    }
    return s;
}

std::uint64_t JointState::component(std::uint64_t joint, std::size_t qudit) const {
    return (joint / stride(qudit)) % dim(widths_[qudit]);
}

double JointState::norm() const {
    double s = 0.0;
    for (const Complex& a : flat_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void JointState::require_normalized(double tol) const {
    if (std::abs(norm() * norm() - 1.0) > tol) {
        throw ValidationError("joint state lost normalization");
    }
}

std::optional<std::array<Complex, 2>> JointState::spin_factor(double tol) const {
    const std::uint64_t d = qudit_dim();
    // Candidate spinor from the joint bin with the largest weight.
    std::uint64_t best = 0;
    double best_w = -1.0;
    for (std::uint64_t j = 0; j < d; ++j) {
        const double w = std::norm(flat_[j * 2]) + std::norm(flat_[j * 2 + 1]);
        if (w > best_w) {
            best_w = w;
            best = j;
        }
    }
    std::array<Complex, 2> spin{flat_[best * 2], flat_[best * 2 + 1]};
    const double sn = std::sqrt(std::norm(spin[0]) + std::norm(spin[1]));
    if (sn < 1e-12) {
        return std::nullopt;
    }
    spin[0] /= sn;
    spin[1] /= sn;
    // Product iff every row is a multiple of the candidate.
    for (std::uint64_t j = 0; j < d; ++j) {
        const Complex q = std::conj(spin[0]) * flat_[j * 2] + std::conj(spin[1]) * flat_[j * 2 + 1];
        if (std::abs(flat_[j * 2] - q * spin[0]) > tol ||
            std::abs(flat_[j * 2 + 1] - q * spin[1]) > tol) {
            return std::nullopt;
        }
    }
    return spin;
}

std::vector<Complex> JointState::factor_spin(const std::array<Complex, 2>& spin,
                                             double tol) const {
    const double sn = std::sqrt(std::norm(spin[0]) + std::norm(spin[1]));
    if (std::abs(sn - 1.0) > 1e-9) {
        throw ValidationError("spin factor must be normalized");
    }
    const std::uint64_t d = qudit_dim();
    std::vector<Complex> q(d);
    double residual = 0.0;
    for (std::uint64_t j = 0; j < d; ++j) {
        q[j] = std::conj(spin[0]) * flat_[j * 2] + std::conj(spin[1]) * flat_[j * 2 + 1];
        residual = std::max(residual, std::abs(flat_[j * 2] - q[j] * spin[0]));
        residual = std::max(residual, std::abs(flat_[j * 2 + 1] - q[j] * spin[1]));
    }
    if (residual > tol) {
        throw ValidationError("state is not a product with the given spin factor");
    }
    double n2 = 0.0;
    for (const Complex& a : q) {
        n2 += std::norm(a);
    }
    const double n = std::sqrt(n2);
    if (n < 1e-12) {
        throw ValidationError("qudit factor vanished");
    }
    for (Complex& a : q) {
        a /= n;
    }
    return q;
}

JointState reflect_bins(const JointState& state, std::size_t qudit,
                        const std::vector<std::uint64_t>& bins) {
    check_qudit_index(state, qudit);
    const std::uint64_t qd = dim(state.widths()[qudit]);
    std::set<std::uint64_t> window;
    for (std::uint64_t b : bins) {
        if (b >= qd) {
            throw RangeError("reflected bin index exceeds the qudit dimension");
        }
        window.insert(b);
    }
    JointState out = state;
    const std::uint64_t d = out.qudit_dim();
    for (std::uint64_t j = 0; j < d; ++j) {
        if (window.count(out.component(j, qudit))) {
            out.flat()[j * 2 + 1] = -out.flat()[j * 2 + 1];
        }
    }
    return out;
}

JointState rotate_spin(const JointState& state, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    JointState out = state;
    const std::uint64_t d = out.qudit_dim();
    for (std::uint64_t j = 0; j < d; ++j) {
        const Complex a0 = state.flat()[j * 2];
        const Complex a1 = state.flat()[j * 2 + 1];
        out.flat()[j * 2] = c * a0 + s * a1;
        out.flat()[j * 2 + 1] = -s * a0 + c * a1;
    }
    return out;
}

namespace {

// Projects onto one spin basis vector; returns the renormalized collapsed
// state with the spin axis reset to the outcome, plus the branch weight.
std::pair<JointState, double> project_spin(const JointState& state,
                                           const std::array<Complex, 2>& vec) {
    const std::uint64_t d = state.qudit_dim();
    std::vector<Complex> coeff(d);
    double p = 0.0;
    for (std::uint64_t j = 0; j < d; ++j) {
        coeff[j] = std::conj(vec[0]) * state.flat()[j * 2] +
                   std::conj(vec[1]) * state.flat()[j * 2 + 1];
        p += std::norm(coeff[j]);
    }
    if (p < 1e-15) {
        return {state, 0.0};
    }
    const double n = std::sqrt(p);
    std::vector<Complex> flat(d * 2);
    for (std::uint64_t j = 0; j < d; ++j) {
        flat[j * 2] = coeff[j] / n * vec[0];
        flat[j * 2 + 1] = coeff[j] / n * vec[1];
    }
    return {JointState::from_flat(state.widths(), std::move(flat)), p};
}

JointState set_spin(const JointState& state, SpinValue value) {
    auto current = state.spin_factor();
    if (!current) {
        throw ValidationError("spin is entangled with the qudits; cannot re-prepare it");
    }
    const std::vector<Complex> q = state.factor_spin(*current);
    std::vector<unsigned> widths = state.widths();
    return JointState::from_parts(std::move(widths), q, spinor_of(value));
}

}  // namespace

SpinOutcome measure_spin(const JointState& state, SpinBasis basis, Rng& rng) {
    state.require_normalized();
    const std::array<Complex, 2> v0 =
        basis == SpinBasis::computational ? spinor_of(SpinValue::up) : spinor_of(SpinValue::plus);
    const std::array<Complex, 2> v1 =
        basis == SpinBasis::computational ? spinor_of(SpinValue::down) : spinor_of(SpinValue::minus);
    auto [s0, p0] = project_spin(state, v0);
    auto [s1, p1] = project_spin(state, v1);
    const SpinValue first =
        basis == SpinBasis::computational ? SpinValue::up : SpinValue::plus;
    const SpinValue second =
        basis == SpinBasis::computational ? SpinValue::down : SpinValue::minus;
    bool pick_first;
    if (p0 < 1e-15) {
        pick_first = false;
    } else if (p1 < 1e-15) {
        pick_first = true;
    } else {
        pick_first = rng.uniform() < p0;
    }
    if (pick_first) {
        return SpinOutcome{basis, first, p0, std::move(s0)};
    }
    return SpinOutcome{basis, second, p1, std::move(s1)};
}

std::vector<std::uint64_t> one_bins(unsigned width, unsigned qubit) {
    check_qubit(qubit, width);
    std::vector<std::uint64_t> bins;
    for (std::uint64_t j = 0; j < dim(width); ++j) {
        if (bit_at(j, qubit, width) == 1) {
            bins.push_back(j);
        }
    }
    return bins;
}

QndResult qnd_measure_qubit(const JointState& state, std::size_t qudit, unsigned qubit,
                            Rng& rng) {
    check_qudit_index(state, qudit);
    check_qubit(qubit, state.widths()[qudit]);
    JointState s = set_spin(state, SpinValue::plus);
    s = reflect_bins(s, qudit, one_bins(state.widths()[qudit], qubit));
    SpinOutcome spin = measure_spin(s, SpinBasis::rotated, rng);
    const int bit = spin.value == SpinValue::plus ? 0 : 1;
    return QndResult{bit, std::move(spin)};
}

namespace {

JointState cz_interaction(const JointState& state, std::size_t qudit_a, unsigned m,
                          std::size_t qudit_b, unsigned n) {
    check_qudit_index(state, qudit_a);
    check_qudit_index(state, qudit_b);
    check_qubit(m, state.widths()[qudit_a]);
    check_qubit(n, state.widths()[qudit_b]);
    if (qudit_a == qudit_b) {
        throw ValidationError("cross-qudit gate needs two distinct qudits");
    }
    JointState s = set_spin(state, SpinValue::plus);
    s = reflect_bins(s, qudit_a, one_bins(state.widths()[qudit_a], m));
    s = rotate_spin(s, std::numbers::pi / 2.0);
    s = reflect_bins(s, qudit_b, one_bins(state.widths()[qudit_b], n));
    s = rotate_spin(s, -std::numbers::pi / 2.0);
    return s;
}

}  // namespace

CzResult cross_qudit_cz(const JointState& state, std::size_t qudit_a, unsigned m,
                        std::size_t qudit_b, unsigned n, Rng& rng) {
    JointState s = cz_interaction(state, qudit_a, m, qudit_b, n);
    SpinOutcome outcome = measure_spin(s, SpinBasis::computational, rng);
    JointState raw = outcome.collapsed;
    JointState corrected = outcome.value == SpinValue::down
                               ? apply_gate(raw, qudit_a, m, gate::Z())
                               : raw;
    return CzResult{std::move(outcome), std::move(raw), std::move(corrected)};
}

CzResult cross_qudit_cz_branch(const JointState& state, std::size_t qudit_a, unsigned m,
                               std::size_t qudit_b, unsigned n, SpinValue branch) {
    if (branch != SpinValue::up && branch != SpinValue::down) {
        throw ValidationError("branch must be a computational spin value");
    }
    JointState s = cz_interaction(state, qudit_a, m, qudit_b, n);
    auto [collapsed, p] = [&] {
        const std::array<Complex, 2> v = spinor_of(branch);
        const std::uint64_t d = s.qudit_dim();
        std::vector<Complex> coeff(d);
        double w = 0.0;
        for (std::uint64_t j = 0; j < d; ++j) {
            coeff[j] = std::conj(v[0]) * s.flat()[j * 2] + std::conj(v[1]) * s.flat()[j * 2 + 1];
            w += std::norm(coeff[j]);
        }
        if (w < 1e-15) {
            throw ValidationError("requested spin branch has vanishing probability");
        }
        const double nn = std::sqrt(w);
        std::vector<Complex> flat(d * 2);
        for (std::uint64_t j = 0; j < d; ++j) {
            flat[j * 2] = coeff[j] / nn * v[0];
            flat[j * 2 + 1] = coeff[j] / nn * v[1];
        }
        return std::make_pair(JointState::from_flat(s.widths(), std::move(flat)), w);
    }();
    SpinOutcome outcome{SpinBasis::computational, branch, p, std::move(collapsed)};
    JointState raw = outcome.collapsed;
    JointState corrected = branch == SpinValue::down
                               ? apply_gate(raw, qudit_a, m, gate::Z())
                               : raw;
    return CzResult{std::move(outcome), std::move(raw), std::move(corrected)};
}

ProtocolResult run_protocol(const JointState& state, const std::vector<ProtocolStep>& steps,
                            Rng& rng) {
    ProtocolResult result{{}, state};
    for (const ProtocolStep& step : steps) {
        if (const auto* r = std::get_if<ReflectStep>(&step)) {
            result.state = reflect_bins(result.state, r->qudit, r->bins);
        } else if (const auto* rot = std::get_if<RotateStep>(&step)) {
            result.state = rotate_spin(result.state, rot->angle);
        } else if (const auto* meas = std::get_if<MeasureStep>(&step)) {
            SpinOutcome out = measure_spin(result.state, meas->basis, rng);
            result.state = out.collapsed;
            result.outcomes.push_back(std::move(out));
        } else if (const auto* prep = std::get_if<PrepareSpinStep>(&step)) {
            result.state = set_spin(result.state, prep->value);
        }
    }
    return result;
}

JointState apply_gate(const JointState& state, std::size_t qudit, unsigned qubit, const Mat2& u) {
    check_qudit_index(state, qudit);
    const unsigned w = state.widths()[qudit];
    check_qubit(qubit, w);
    require_unitary(u, "joint-state gate");
    const std::uint64_t qd = dim(w);
    const std::uint64_t stride = state.stride(qudit);
    const std::uint64_t d = state.qudit_dim();
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    JointState out = state;
    for (std::uint64_t hi = 0; hi < d / (qd * stride); ++hi) {
        for (std::uint64_t b = 0; b < qd; ++b) {
            if (b & bit) {
                continue;
            }
            for (std::uint64_t lo = 0; lo < stride; ++lo) {
                const std::uint64_t j0 = (hi * qd + b) * stride + lo;
                const std::uint64_t j1 = (hi * qd + (b | bit)) * stride + lo;
                for (int sp = 0; sp < 2; ++sp) {
                    const Complex a0 = state.flat()[j0 * 2 + sp];
                    const Complex a1 = state.flat()[j1 * 2 + sp];
                    out.flat()[j0 * 2 + sp] = u(0, 0) * a0 + u(0, 1) * a1;
                    out.flat()[j1 * 2 + sp] = u(1, 0) * a0 + u(1, 1) * a1;
                }
            }
        }
    }
    return out;
}

JointState apply_controlled(const JointState& state, std::size_t qudit,
                            const std::vector<unsigned>& controls, unsigned target,
                            const Mat2& u) {
    check_qudit_index(state, qudit);
    const unsigned w = state.widths()[qudit];
    check_qubit(target, w);
    std::uint64_t cmask = 0;
    for (unsigned c : controls) {
        check_qubit(c, w);
        if (c == target || (cmask >> c) & 1) {
            throw ValidationError("control qubits must be distinct from each other and the target");
        }
        cmask |= std::uint64_t{1} << c;
    }
    require_unitary(u, "joint-state gate");
    const std::uint64_t qd = dim(w);
    const std::uint64_t stride = state.stride(qudit);
    const std::uint64_t d = state.qudit_dim();
    const std::uint64_t bit = std::uint64_t{1} << target;
    JointState out = state;
    for (std::uint64_t hi = 0; hi < d / (qd * stride); ++hi) {
        for (std::uint64_t b = 0; b < qd; ++b) {
            if ((b & bit) || (b & cmask) != cmask) {
                continue;
            }
            for (std::uint64_t lo = 0; lo < stride; ++lo) {
                const std::uint64_t j0 = (hi * qd + b) * stride + lo;
                const std::uint64_t j1 = (hi * qd + (b | bit)) * stride + lo;
                for (int sp = 0; sp < 2; ++sp) {
                    const Complex a0 = state.flat()[j0 * 2 + sp];
                    const Complex a1 = state.flat()[j1 * 2 + sp];
                    out.flat()[j0 * 2 + sp] = u(0, 0) * a0 + u(0, 1) * a1;
                    out.flat()[j1 * 2 + sp] = u(1, 0) * a0 + u(1, 1) * a1;
                }
            }
        }
    }
    return out;
}

JointState apply_permutation(const JointState& state, std::size_t qudit,
                             const BinPermutation& perm) {
    check_qudit_index(state, qudit);
    const std::uint64_t qd = dim(state.widths()[qudit]);
    if (perm.num_bins != qd) {
        throw DimensionError("permutation size does not match the qudit dimension");
    }
    const std::uint64_t stride = state.stride(qudit);
    const std::uint64_t d = state.qudit_dim();
    JointState out = state;
    for (std::uint64_t hi = 0; hi < d / (qd * stride); ++hi) {
        for (std::uint64_t b = 0; b < qd; ++b) {
            const std::uint64_t src = (hi * qd + b) * stride;
            const std::uint64_t dst = (hi * qd + perm.mapping[b]) * stride;
            for (std::uint64_t lo = 0; lo < stride; ++lo) {
                out.flat()[(dst + lo) * 2] = state.flat()[(src + lo) * 2];
                out.flat()[(dst + lo) * 2 + 1] = state.flat()[(src + lo) * 2 + 1];
            }
        }
    }
    return out;
}

}  // namespace qloop
