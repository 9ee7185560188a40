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

#include "qloop/circuit.hpp"

#include <cstdio>
#include <sstream>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

// Shortest-round-trip would also do; 17 significant digits keep the
// serialized form bit-exact and predictable.
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_params(const GateParams& p) {
    return fmt_double(p.theta) + "," + fmt_double(p.phi) + "," + fmt_double(p.psi0) + ","
           + fmt_double(p.psi1);
}

struct Serializer {
    std::ostringstream out;

    void operator()(const GateStmt& s) {
        if (s.u_params)
            out << "u(" << fmt_params(*s.u_params) << ") ";
        else
            out << "gate " << s.gate << " ";
        out << s.qudit << "[" << s.qubit << "]\n";
    }
    void operator()(const CnotStmt& s) {
        out << "cnot " << s.qudit << "[" << s.control << "] " << s.qudit << "[" << s.target
            << "]\n";
    }
    void operator()(const ToffoliStmt& s) {
        out << "toffoli " << s.qudit << "[" << s.control_a << "] " << s.qudit << "["
            << s.control_b << "] " << s.qudit << "[" << s.target << "]\n";
    }
    void operator()(const ControlledUStmt& s) {
        out << "cu(" << fmt_params(s.params) << ")";
        for (unsigned c : s.controls)
            out << " " << s.qudit << "[" << c << "]";
        out << " " << s.qudit << "[" << s.target << "]\n";
    }
    void operator()(const QndStmt& s) {
        out << "qnd " << s.spin << " " << s.qudit << "[" << s.qubit << "]\n";
    }
    void operator()(const CrossCzStmt& s) {
        out << "cz " << s.spin << " " << s.qudit_a << "[" << s.qubit_a << "] " << s.qudit_b
            << "[" << s.qubit_b << "]\n";
    }
    void operator()(const PrepareStmt& s) {
        out << "prepare " << s.qudit << " [";
        for (std::size_t j = 0; j < s.amplitudes.size(); ++j) {
            if (j)
                out << "; ";
            out << fmt_double(s.amplitudes[j].real()) << "," << fmt_double(s.amplitudes[j].imag());
        }
        out << "]\n";
    }
    void operator()(const MeasureStmt& s) { out << "measure " << s.qudit << "\n"; }
};

}  // namespace

int CircuitIR::qudit_index(const std::string& name) const {
    for (std::size_t i = 0; i < qudits.size(); ++i)
        if (qudits[i].name == name)
            return static_cast<int>(i);
    return -1;
}

const QuditDecl& CircuitIR::qudit_at(const std::string& name) const {
    const int i = qudit_index(name);
    if (i < 0)
        throw ValidationError("unknown qudit '" + name + "'");
    return qudits[static_cast<std::size_t>(i)];
}

bool CircuitIR::has_spin(const std::string& name) const {
    for (const auto& s : spins)
        if (s.name == name)
            return true;
    return false;
}

bool CircuitIR::uses_spin_statements() const {
    for (const auto& st : statements)
        if (std::holds_alternative<QndStmt>(st) || std::holds_alternative<CrossCzStmt>(st))
            return true;
    return false;
}

Mat2 statement_matrix(const GateStmt& s) {
    if (s.u_params)
        return cell_matrix(*s.u_params);
    const auto m = gate::by_name(s.gate);
    if (!m)
        throw ValidationError("unknown gate '" + s.gate + "'");
    return *m;
}

std::string serialize(const CircuitIR& ir) {
    Serializer ser;
    for (const auto& q : ir.qudits)
        ser.out << "qudit " << q.name << " " << q.width << "\n";
    for (const auto& s : ir.spins)
        ser.out << "spin " << s.name << "\n";
    for (const auto& st : ir.statements)
        std::visit(ser, st);
    return ser.out.str();
}

}  // namespace qloop
