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

#include "qloop/bitops.hpp"

namespace qloop {

std::vector<std::pair<std::uint64_t, std::uint64_t>> enumerate_pairs(unsigned num_qubits,
                                                                     unsigned qubit) {
    const std::uint64_t d = dim(num_qubits);
    check_qubit(qubit, num_qubits);

    const std::uint64_t step = std::uint64_t{1} << qubit;
    const std::uint64_t low_mask = step - 1;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    pairs.reserve(d / 2);
    // Spread k over the bins with bit `qubit` clear: insert a zero at that
    // position.  k ascending gives j ascending.
    for (std::uint64_t k = 0; k < d / 2; ++k) {
        const std::uint64_t j = ((k & ~low_mask) << 1) | (k & low_mask);
        pairs.emplace_back(j, j | step);
    }
    return pairs;
}

std::vector<std::uint64_t> enumerate_masked(unsigned num_qubits,
                                            const std::vector<BitConstraint>& constraints) {
    const std::uint64_t d = dim(num_qubits);

    std::uint64_t mask = 0;
    std::uint64_t want = 0;
    for (const auto& c : constraints) {
        check_qubit(c.qubit, num_qubits);
        if (c.value != 0 && c.value != 1)
            throw ValidationError("constraint value must be 0 or 1");
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        if (mask & bit)
            throw ValidationError("duplicate qubit " + std::to_string(c.qubit)
                                  + " in constraints");
        mask |= bit;
        if (c.value)
            want |= bit;
    }

    std::vector<std::uint64_t> bins;
    bins.reserve(d >> constraints.size());
    for (std::uint64_t j = 0; j < d; ++j)
        if ((j & mask) == want)
            bins.push_back(j);
    return bins;
}

}  // namespace qloop
