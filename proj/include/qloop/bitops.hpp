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

#include <atomic>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qloop/errors.hpp"

namespace qloop {

// Index arithmetic for a register of N logical qubits stored in the 2^N time
// bins of a single photonic qudit.  Bin j at time j*T encodes the basis state
// whose i-th binary digit is qubit i, so qubit 0 is the least-significant bit:
// the even bins carry qubit 0 = |0>, bins with the 2^i bit clear carry qubit i
// = |0>, and the partner of bin j under qubit i differs by exactly 2^i.

inline constexpr unsigned kDefaultMaxQubits = 24;

namespace detail {
inline std::atomic<unsigned> g_max_qubits{kDefaultMaxQubits};
}

// Allocation cap on register width.  Reconfigure from the main thread before
// building states; everything downstream reads it through dim().
inline unsigned max_qubits() { return detail::g_max_qubits.load(); }
inline void set_max_qubits(unsigned n) { detail::g_max_qubits.store(n); }

inline std::uint64_t dim(unsigned num_qubits) {
    if (num_qubits == 0 || num_qubits > max_qubits())
        throw RangeError("register width " + std::to_string(num_qubits) + " outside [1, "
                         + std::to_string(max_qubits()) + "]");
    return std::uint64_t{1} << num_qubits;
}

inline void check_qubit(unsigned qubit, unsigned num_qubits) {
    if (qubit >= num_qubits)
        throw RangeError("qubit " + std::to_string(qubit) + " outside register of width "
                         + std::to_string(num_qubits));
}

inline void check_bin(std::uint64_t j, unsigned num_qubits) {
    if (j >= dim(num_qubits))
        throw RangeError("bin " + std::to_string(j) + " outside register of width "
                         + std::to_string(num_qubits));
}

// Value of qubit `qubit` encoded in bin j.
inline int bit_at(std::uint64_t j, unsigned qubit, unsigned num_qubits) {
    check_bin(j, num_qubits);
    check_qubit(qubit, num_qubits);
    return static_cast<int>((j >> qubit) & 1u);
}

// True iff bin j belongs to Z_i, the set of bins carrying qubit i = |0>.
inline bool in_zero_set(std::uint64_t j, unsigned qubit, unsigned num_qubits) {
    return bit_at(j, qubit, num_qubits) == 0;
}

// The bin that differs from j only in qubit `qubit` (distance 2^qubit).
inline std::uint64_t pair_partner(std::uint64_t j, unsigned qubit, unsigned num_qubits) {
    check_bin(j, num_qubits);
    check_qubit(qubit, num_qubits);
    return j ^ (std::uint64_t{1} << qubit);
}

// All (j, j + 2^qubit) pairs with j in Z_qubit, ascending in j.
std::vector<std::pair<std::uint64_t, std::uint64_t>> enumerate_pairs(unsigned num_qubits,
                                                                     unsigned qubit);

struct BitConstraint {
    unsigned qubit;
    int value;  // 0 or 1

    friend bool operator==(const BitConstraint&, const BitConstraint&) = default;
};

// Ascending list of bins whose digits match every constraint.  Constraints
// must name distinct qubits and use values 0/1.
std::vector<std::uint64_t> enumerate_masked(unsigned num_qubits,
                                            const std::vector<BitConstraint>& constraints);

}  // namespace qloop
