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
#include <variant>
#include <vector>

#include "qloop/matrix.hpp"
#include "qloop/mzi.hpp"
#include "qloop/qudit_state.hpp"

namespace qloop {

// Validated in-memory circuit.  Qudits and spins are declared up front;
// statements reference them by name and are stored in program order.

struct QuditDecl {
    std::string name;
    unsigned width;  // number of logical qubits, >= 1

    friend bool operator==(const QuditDecl&, const QuditDecl&) = default;
};

struct SpinDecl {
    std::string name;

    friend bool operator==(const SpinDecl&, const SpinDecl&) = default;
};

// Named gate from the fixed vocabulary, or an arbitrary U(2) given by its
// cell parameters (gate == "u").
struct GateStmt {
    std::string gate;
    std::optional<GateParams> u_params;
    std::string qudit;
    unsigned qubit;

    friend bool operator==(const GateStmt&, const GateStmt&) = default;
};

struct CnotStmt {
    std::string qudit;
    unsigned control;
    unsigned target;

    friend bool operator==(const CnotStmt&, const CnotStmt&) = default;
};

struct ToffoliStmt {
    std::string qudit;
    unsigned control_a;
    unsigned control_b;
    unsigned target;

    friend bool operator==(const ToffoliStmt&, const ToffoliStmt&) = default;
};

// Arbitrary U(2) on `target` applied where every control qubit reads 1.
struct ControlledUStmt {
    std::string qudit;
    std::vector<unsigned> controls;
    unsigned target;
    GateParams params;

    friend bool operator==(const ControlledUStmt&, const ControlledUStmt&) = default;
};

struct QndStmt {
    std::string spin;
    std::string qudit;
    unsigned qubit;

    friend bool operator==(const QndStmt&, const QndStmt&) = default;
};

struct CrossCzStmt {
    std::string spin;
    std::string qudit_a;
    unsigned qubit_a;
    std::string qudit_b;
    unsigned qubit_b;

    friend bool operator==(const CrossCzStmt&, const CrossCzStmt&) = default;
};

struct PrepareStmt {
    std::string qudit;
    std::vector<Complex> amplitudes;  // normalized, length 2^width

    friend bool operator==(const PrepareStmt&, const PrepareStmt&) = default;
};

struct MeasureStmt {
    std::string qudit;

    friend bool operator==(const MeasureStmt&, const MeasureStmt&) = default;
};

using Statement = std::variant<GateStmt, CnotStmt, ToffoliStmt, ControlledUStmt, QndStmt,
                               CrossCzStmt, PrepareStmt, MeasureStmt>;

struct CircuitIR {
    std::vector<QuditDecl> qudits;
    std::vector<SpinDecl> spins;
    std::vector<Statement> statements;

    // Index into qudits, or -1.
    int qudit_index(const std::string& name) const;
    const QuditDecl& qudit_at(const std::string& name) const;  // throws ValidationError
    bool has_spin(const std::string& name) const;

    bool uses_spin_statements() const;
    bool single_qudit() const { return qudits.size() == 1; }

    friend bool operator==(const CircuitIR&, const CircuitIR&) = default;
};

// The 2x2 matrix of a gate statement (named lookup or cell_matrix).
Mat2 statement_matrix(const GateStmt& s);

// Canonical DSL text; parse(serialize(ir)) == ir for every valid circuit.
std::string serialize(const CircuitIR& ir);

}  // namespace qloop
