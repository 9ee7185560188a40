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

#include <set>
#include <vector>

#include "doctest.h"
#include "qloop/bitops.hpp"
#include "qloop/errors.hpp"

using namespace qloop;

TEST_CASE("bit digits of bin labels") {
    CHECK(dim(3) == 8);
    CHECK(bit_at(5, 0, 3) == 1);  // 5 = 101b
    CHECK(bit_at(5, 1, 3) == 0);
    CHECK(bit_at(5, 2, 3) == 1);
    for (unsigned i = 0; i < 4; ++i) CHECK(bit_at(0, i, 4) == 0);
    CHECK_THROWS_AS(bit_at(8, 0, 3), RangeError);
    CHECK_THROWS_AS(bit_at(0, 3, 3), RangeError);
}

TEST_CASE("zero sets match the even/odd pattern") {
    // Z_0 holds the even bins, Z_1 repeats in blocks of two.
    std::vector<std::uint64_t> z0, z1;
    for (std::uint64_t j = 0; j < 8; ++j) {
        if (in_zero_set(j, 0, 3)) z0.push_back(j);
        if (in_zero_set(j, 1, 3)) z1.push_back(j);
    }
    CHECK(z0 == std::vector<std::uint64_t>{0, 2, 4, 6});
    CHECK(z1 == std::vector<std::uint64_t>{0, 1, 4, 5});
}

TEST_CASE("pair partner is an involution at distance 2^i") {
    CHECK(pair_partner(2, 0, 2) == 3);
    CHECK(pair_partner(3, 0, 2) == 2);
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned i = 0; i < n; ++i)
            for (std::uint64_t j = 0; j < dim(n); ++j) {
                const std::uint64_t p = pair_partner(j, i, n);
                CHECK(pair_partner(p, i, n) == j);
                CHECK((j > p ? j - p : p - j) == (std::uint64_t{1} << i));
                CHECK(in_zero_set(j, i, n) != in_zero_set(p, i, n));
            }
}

TEST_CASE("enumerate_pairs lists (j, j + 2^i) for j in Z_i") {
    using P = std::pair<std::uint64_t, std::uint64_t>;
    CHECK(enumerate_pairs(2, 0) == std::vector<P>{{0, 1}, {2, 3}});
    CHECK(enumerate_pairs(3, 1) == std::vector<P>{{0, 2}, {1, 3}, {4, 6}, {5, 7}});
    CHECK(enumerate_pairs(1, 0) == std::vector<P>{{0, 1}});
    CHECK_THROWS_AS(enumerate_pairs(3, 3), RangeError);
}

TEST_CASE("enumerate_pairs partitions every register up to 12 qubits") {
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned i = 0; i < n; ++i) {
            const auto pairs = enumerate_pairs(n, i);
            REQUIRE(pairs.size() == dim(n) / 2);
            std::set<std::uint64_t> seen;
            std::uint64_t last = 0;
            for (const auto& [a, b] : pairs) {
                CHECK(a >= last);
                last = a;
                CHECK(in_zero_set(a, i, n));
                CHECK(b == a + (std::uint64_t{1} << i));
                seen.insert(a);
                seen.insert(b);
            }
            CHECK(seen.size() == dim(n));
        }
}

TEST_CASE("enumerate_masked selects bins by digit constraints") {
    CHECK(enumerate_masked(2, {{1, 1}, {0, 0}}) == std::vector<std::uint64_t>{2});
    CHECK(enumerate_masked(3, {{2, 1}, {1, 1}, {0, 0}}) == std::vector<std::uint64_t>{6});
    CHECK(enumerate_masked(3, {}) ==
          std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7});
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(enumerate_masked(n, {{0, 1}}).size() == dim(n) / 2);
        if (n >= 2)
            CHECK(enumerate_masked(n, {{0, 1}, {n - 1, 0}}).size() == dim(n) / 4);
    }
    CHECK_THROWS_AS(enumerate_masked(3, {{1, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(enumerate_masked(3, {{3, 0}}), RangeError);
    CHECK_THROWS_AS(enumerate_masked(3, {{0, 2}}), ValidationError);
}

TEST_CASE("register width cap is configurable") {
    CHECK(max_qubits() == kDefaultMaxQubits);
    CHECK_THROWS_AS(dim(kDefaultMaxQubits + 1), RangeError);
    set_max_qubits(kDefaultMaxQubits + 1);
    CHECK(dim(kDefaultMaxQubits + 1) ==
          std::uint64_t{1} << (kDefaultMaxQubits + 1));
    set_max_qubits(kDefaultMaxQubits);
}
