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

#include <optional>
#include <string>
#include <string_view>

#include "qloop/circuit.hpp"

namespace qloop {

// First syntactic or semantic problem found, with a 1-based source location.
struct ParseError {
    std::size_t line;
    std::size_t column;
    std::string message;
    std::string token;  // offending token text, possibly empty

    std::string to_string() const;
};

struct ParseResult {
    std::optional<CircuitIR> circuit;
    std::optional<ParseError> error;

    bool ok() const { return circuit.has_value(); }
};

// Line-oriented grammar; '#' starts a comment, blank lines are ignored.
//
//   qudit NAME WIDTH
//   spin NAME
//   gate (X|Y|Z|H|S|SDG|TG) NAME[i]
//   u(theta,phi,psi0,psi1) NAME[i]
//   cu(theta,phi,psi0,psi1) NAME[c] ... NAME[t]
//   cnot NAME[m] NAME[n]
//   toffoli NAME[m] NAME[n] NAME[p]
//   qnd SPIN NAME[i]
//   cz SPIN NAME1[m] NAME2[n]
//   prepare NAME [re,im; re,im; ...]
//   measure NAME
//
// All references are validated (declared names, qubit < width, distinct
// operands, nothing after a qudit's measure, prepare first and unique).
ParseResult parse(std::string_view source);

}  // namespace qloop
