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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qloop {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An index (time bin, qubit, qudit id, ...) outside its valid range.
class RangeError : public Error {
  public:
    using Error::Error;
};

// Mismatched vector/tensor dimensions or a non-power-of-two length.
class DimensionError : public Error {
  public:
    using Error::Error;
};

// Semantically invalid request: duplicate constraint, control == target,
// non-unitary matrix, unnormalized amplitudes, ...
class ValidationError : public Error {
  public:
    using Error::Error;
};

// The requested execution path cannot handle this statement or feature.
class UnsupportedError : public Error {
  public:
    using Error::Error;
};

// Two amplitude packets met at the same (node, time) outside a beamsplitter,
// or a packet fell off the expected time grid.  Carries the location so a
// corrupted schedule can be pinned to a pass and block.
class CollisionError : public Error {
  public:
    CollisionError(const std::string& msg, std::size_t pass, std::size_t block)
        : Error(msg), pass_index(pass), block_index(block) {}

    std::size_t pass_index;
    std::size_t block_index;
};

}  // namespace qloop
