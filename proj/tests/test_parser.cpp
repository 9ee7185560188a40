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

#include <cmath>
#include <string>

#include "doctest.h"
#include "qloop/parser.hpp"

using namespace qloop;

namespace {

CircuitIR must_parse(const std::string& src) {
    const ParseResult r = parse(src);
    REQUIRE_MESSAGE(r.ok(), (r.error ? r.error->to_string() : "no circuit"));
    return *r.circuit;
}

ParseError must_fail(const std::string& src) {
    const ParseResult r = parse(src);
    REQUIRE_FALSE(r.ok());
    return *r.error;
}

}  // namespace

TEST_CASE("a small circuit parses into the expected IR") {
    const CircuitIR ir = must_parse(
        "# comment line\n"
        "qudit q 2\n"
        "\n"
        "gate H q[0]\n"
        "cnot q[0] q[1]\n"
        "measure q\n");
    CHECK(ir.qudits == std::vector<QuditDecl>{{"q", 2}});
    CHECK(ir.spins.empty());
    REQUIRE(ir.statements.size() == 3);
    CHECK(std::get<GateStmt>(ir.statements[0]) == GateStmt{"H", std::nullopt, "q", 0});
    CHECK(std::get<CnotStmt>(ir.statements[1]) == CnotStmt{"q", 0, 1});
    CHECK(std::get<MeasureStmt>(ir.statements[2]) == MeasureStmt{"q"});
}

TEST_CASE("every statement kind round-trips through serialize") {
    const std::string src =
        "qudit a 2\n"
        "qudit b 1\n"
        "spin s\n"
        "prepare a [0.5,0; 0.5,0; 0.5,0; 0,-0.5]\n"
        "gate SDG a[1]\n"
        "u(1.25,0.5,6,0.125) a[0]\n"
        "cu(3.141592653589793,0,1.5,4.5) a[0] a[1]\n"
        "cnot a[1] a[0]\n"
        "toffoli a[0] a[1] a[0]\n"  // placeholder, replaced below
        "qnd s a[1]\n"
        "cz s a[0] b[0]\n"
        "measure b\n";
    // toffoli needs three distinct qubits; use a wider register.
    const std::string fixed =
        "qudit a 3\n"
        "qudit b 1\n"
        "spin s\n"
        "prepare a [0.5,0; 0.5,0; 0.5,0; 0,-0.5; 0,0; 0,0; 0,0; 0,0]\n"
        "gate SDG a[1]\n"
        "u(1.25,0.5,6,0.125) a[0]\n"
        "cu(3.141592653589793,0,1.5,4.5) a[2] a[1]\n"
        "cnot a[1] a[0]\n"
        "toffoli a[2] a[1] a[0]\n"
        "qnd s a[1]\n"
        "cz s a[0] b[0]\n"
        "measure b\n";
    (void)src;
    const CircuitIR ir = must_parse(fixed);
    REQUIRE(ir.statements.size() == 9);
    CHECK(std::get<ControlledUStmt>(ir.statements[3]).controls ==
          std::vector<unsigned>{2});
    const std::string text = serialize(ir);
    const CircuitIR again = must_parse(text);
    CHECK(again == ir);
    CHECK(serialize(again) == text);
}

TEST_CASE("prepare amplitudes are validated and normalized") {
    // Rounded literals inside the tolerance band are rescaled to unit norm.
    const CircuitIR ir = must_parse("qudit q 1\nprepare q [0.70711,0; 0.70711,0]\n");
    const auto& prep = std::get<PrepareStmt>(ir.statements[0]);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(prep.amplitudes[0] - Complex{r, 0}) < 1e-5);
    double sq = 0.0;
    for (const Complex& a : prep.amplitudes) sq += std::norm(a);
    CHECK(sq == doctest::Approx(1.0).epsilon(1e-12));

    // Slightly off unit norm is accepted silently; badly off is rejected.
    CHECK(parse("qudit q 1\nprepare q [1.0001,0; 0,0]\n").ok());
    CHECK_FALSE(parse("qudit q 1\nprepare q [1,0; 1,0]\n").ok());     // norm sqrt(2)
    CHECK_FALSE(parse("qudit q 1\nprepare q [2,0; 0,0]\n").ok());
    CHECK_FALSE(parse("qudit q 1\nprepare q [1,0]\n").ok());          // wrong length
    CHECK_FALSE(parse("qudit q 1\nprepare q [0,0; 0,0]\n").ok());     // zero vector
}

TEST_CASE("semantic rules are enforced with source locations") {
    CHECK(must_fail("qudit q 2\ngate Q q[0]\n").line == 2);            // unknown gate
    CHECK(must_fail("qudit q 2\ngate H q[2]\n").line == 2);            // qubit too large
    CHECK(must_fail("qudit q 2\nqudit q 3\n").line == 2);              // duplicate name
    CHECK(must_fail("gate H q[0]\n").line == 1);                       // undeclared qudit
    CHECK(must_fail("qudit q 2\ncnot q[1] q[1]\n").line == 2);         // same operand
    CHECK(must_fail("qudit q 3\ntoffoli q[0] q[0] q[1]\n").line == 2);
    CHECK(must_fail("qudit q 2\ngate H q[0]\nprepare q [1,0;0,0;0,0;0,0]\n").line == 3);
    CHECK(must_fail("qudit q 1\nmeasure q\ngate H q[0]\n").line == 3); // after measure
    CHECK(must_fail("qudit q 1\nqnd s q[0]\n").line == 2);             // undeclared spin
    CHECK(must_fail("qudit a 1\nspin s\ncz s a[0] a[0]\n").line == 3); // same qudit
    CHECK(must_fail("qudit q 0\n").line == 1);                         // zero width
    CHECK(must_fail("qudit q 2\ngate H q[x]\n").line == 2);            // bad index
    CHECK(must_fail("qudit q 2 extra\n").line == 1);                   // trailing junk

    const ParseError e = must_fail("qudit q 2\ngate H r[0]\n");
    CHECK(e.line == 2);
    CHECK(e.column > 1);
    CHECK(!e.to_string().empty());
}

TEST_CASE("cu statements validate controls against the target") {
    CHECK(parse("qudit q 2\ncu(1,1,1,1) q[1] q[0]\n").ok());
    CHECK(parse("qudit q 3\ncu(1,1,1,1) q[2] q[0] q[1]\n").ok());
    CHECK_FALSE(parse("qudit q 2\ncu(1,1,1,1) q[0] q[0]\n").ok());
    CHECK_FALSE(parse("qudit q 1\ncu(1,1,1,1) q[0]\n").ok());  // no controls is "u"
}
