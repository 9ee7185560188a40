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

#include "qloop/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include "qloop/bitops.hpp"

namespace qloop {

namespace {

struct Tok {
    enum Kind { kIdent, kNumber, kLParen, kRParen, kLBrack, kRBrack, kComma, kSemi, kEnd };
    Kind kind;
    std::string text;
    std::size_t column;  // 1-based
};

const char* kind_name(Tok::Kind k) {
    switch (k) {
        case Tok::kIdent: return "identifier";
        case Tok::kNumber: return "number";
        case Tok::kLParen: return "'('";
        case Tok::kRParen: return "')'";
        case Tok::kLBrack: return "'['";
        case Tok::kRBrack: return "']'";
        case Tok::kComma: return "','";
        case Tok::kSemi: return "';'";
        case Tok::kEnd: return "end of line";
    }
    return "?";
}

// Internal throw-to-report channel; parse() converts it to a ParseResult.
struct Fail {
    ParseError error;
};

[[noreturn]] void fail(std::size_t line, std::size_t col, std::string msg, std::string tok = "") {
    throw Fail{ParseError{line, col, std::move(msg), std::move(tok)}};
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool number_start(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
}

std::vector<Tok> lex_line(std::string_view text, std::size_t line_no) {
    std::vector<Tok> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t col = i + 1;
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j]))
                ++j;
            toks.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (number_start(c)) {
            std::size_t j = i;
            if (text[j] == '-' || text[j] == '+')
                ++j;
            bool any = false;
            while (j < text.size()
                   && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) {
                any = any || std::isdigit(static_cast<unsigned char>(text[j]));
                ++j;
            }
            if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < text.size() && (text[k] == '-' || text[k] == '+'))
                    ++k;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                    ++k;
                j = k;
            }
            if (!any)
                fail(line_no, col, "malformed number", std::string(1, c));
            toks.push_back({Tok::kNumber, std::string(text.substr(i, j - i)), col});
            i = j;
            continue;
        }
        switch (c) {
            case '(': toks.push_back({Tok::kLParen, "(", col}); break;
            case ')': toks.push_back({Tok::kRParen, ")", col}); break;
            case '[': toks.push_back({Tok::kLBrack, "[", col}); break;
            case ']': toks.push_back({Tok::kRBrack, "]", col}); break;
            case ',': toks.push_back({Tok::kComma, ",", col}); break;
            case ';': toks.push_back({Tok::kSemi, ";", col}); break;
            default: fail(line_no, col, "unexpected character", std::string(1, c));
        }
        ++i;
    }
    toks.push_back({Tok::kEnd, "", text.size() + 1});
    return toks;
}

// One statement line being parsed.
class Line {
  public:
    Line(std::vector<Tok> toks, std::size_t line_no) : toks_(std::move(toks)), line_(line_no) {}

    const Tok& peek() const { return toks_[pos_]; }
    std::size_t line_no() const { return line_; }

    const Tok& expect(Tok::Kind k, const char* what) {
        const Tok& t = toks_[pos_];
        if (t.kind != k)
            fail(line_, t.column,
                 std::string("expected ") + what + ", found " + kind_name(t.kind), t.text);
        ++pos_;
        return t;
    }

    std::string ident(const char* what) { return expect(Tok::kIdent, what).text; }

    double number(const char* what) {
        const Tok& t = expect(Tok::kNumber, what);
        double v = 0.0;
        const auto* begin = t.text.data();
        const auto* end = begin + t.text.size();
        const auto res = std::from_chars(begin, end, v);
        if (res.ec != std::errc{} || res.ptr != end)
            fail(line_, t.column, "malformed number", t.text);
        return v;
    }

    unsigned uint(const char* what) {
        const Tok& t = peek();
        const double v = number(what);
        if (v < 0.0 || v != std::floor(v) || v > 1e9)
            fail(line_, t.column, std::string(what) + " must be a non-negative integer", t.text);
        return static_cast<unsigned>(v);
    }

    void end() {
        const Tok& t = toks_[pos_];
        if (t.kind != Tok::kEnd)
            fail(line_, t.column, "trailing input after statement", t.text);
    }

    [[noreturn]] void fail_at(const Tok& t, std::string msg) {
        fail(line_, t.column, std::move(msg), t.text);
    }

  private:
    std::vector<Tok> toks_;
    std::size_t line_ = 0;
    std::size_t pos_ = 0;
};

struct QuditRef {
    std::string name;
    unsigned qubit;
    Tok name_tok;
    Tok index_tok;
};

class Parser {
  public:
    explicit Parser(std::string_view source) : source_(source) {}

    CircuitIR run() {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= source_.size()) {
            const std::size_t nl = source_.find('\n', start);
            const std::size_t len = (nl == std::string_view::npos ? source_.size() : nl) - start;
            ++line_no;
            parse_line(source_.substr(start, len), line_no);
            if (nl == std::string_view::npos)
                break;
            start = nl + 1;
        }
        return std::move(ir_);
    }

  private:
    void parse_line(std::string_view text, std::size_t line_no) {
        Line line(lex_line(text, line_no), line_no);
        if (line.peek().kind == Tok::kEnd)
            return;

        const Tok head = line.peek();
        const std::string kw = line.ident("statement keyword");
        if (kw == "qudit")
            parse_qudit(line);
        else if (kw == "spin")
            parse_spin(line);
        else if (kw == "gate")
            parse_gate(line);
        else if (kw == "u")
            parse_u(line);
        else if (kw == "cu")
            parse_cu(line);
        else if (kw == "cnot")
            parse_cnot(line);
        else if (kw == "toffoli")
            parse_toffoli(line);
        else if (kw == "qnd")
            parse_qnd(line);
        else if (kw == "cz")
            parse_cz(line);
        else if (kw == "prepare")
            parse_prepare(line);
        else if (kw == "measure")
            parse_measure(line);
        else
            fail(line_no, head.column, "unknown statement '" + kw + "'", kw);
    }

    // --- declarations ---------------------------------------------------

    void declare_name(Line& line, const Tok& tok, const std::string& name) {
        if (!names_.insert(name).second)
            line.fail_at(tok, "name '" + name + "' already declared");
    }

    void parse_qudit(Line& line) {
        const Tok name_tok = line.peek();
        const std::string name = line.ident("qudit name");
        const Tok width_tok = line.peek();
        const unsigned width = line.uint("width");
        line.end();
        if (width == 0 || width > max_qubits())
            line.fail_at(width_tok, "width must be in [1, " + std::to_string(max_qubits()) + "]");
        declare_name(line, name_tok, name);
        ir_.qudits.push_back({name, width});
    }

    void parse_spin(Line& line) {
        const Tok name_tok = line.peek();
        const std::string name = line.ident("spin name");
        line.end();
        declare_name(line, name_tok, name);
        ir_.spins.push_back({name});
    }

    // --- operand helpers ------------------------------------------------

    QuditRef qudit_ref(Line& line) {
        QuditRef ref;
        ref.name_tok = line.peek();
        ref.name = line.ident("qudit name");
        line.expect(Tok::kLBrack, "'['");
        ref.index_tok = line.peek();
        ref.qubit = line.uint("qubit index");
        line.expect(Tok::kRBrack, "']'");
        return ref;
    }

    const QuditDecl& resolve(Line& line, const QuditRef& ref) {
        const int idx = ir_.qudit_index(ref.name);
        if (idx < 0)
            line.fail_at(ref.name_tok, "unknown qudit '" + ref.name + "'");
        const QuditDecl& q = ir_.qudits[static_cast<std::size_t>(idx)];
        if (ref.qubit >= q.width)
            line.fail_at(ref.index_tok, "qubit " + std::to_string(ref.qubit)
                                            + " outside qudit '" + q.name + "' of width "
                                            + std::to_string(q.width));
        if (measured_.count(q.name))
            line.fail_at(ref.name_tok, "qudit '" + q.name + "' was already measured");
        return q;
    }

    std::string spin_ref(Line& line) {
        const Tok tok = line.peek();
        const std::string name = line.ident("spin name");
        if (!ir_.has_spin(name))
            line.fail_at(tok, "unknown spin '" + name + "'");
        return name;
    }

    GateParams params4(Line& line) {
        line.expect(Tok::kLParen, "'('");
        GateParams p{};
        p.theta = line.number("theta");
        line.expect(Tok::kComma, "','");
        p.phi = line.number("phi");
        line.expect(Tok::kComma, "','");
        p.psi0 = line.number("psi0");
        line.expect(Tok::kComma, "','");
        p.psi1 = line.number("psi1");
        line.expect(Tok::kRParen, "')'");
        return p;
    }

    void note_use(const std::string& qudit) { used_.insert(qudit); }

    // --- statements -----------------------------------------------------

    void parse_gate(Line& line) {
        const Tok mn_tok = line.peek();
        const std::string mnemonic = line.ident("gate mnemonic");
        if (!gate::by_name(mnemonic))
            line.fail_at(mn_tok, "unknown gate '" + mnemonic + "'");
        const QuditRef ref = qudit_ref(line);
        line.end();
        resolve(line, ref);
        note_use(ref.name);
        ir_.statements.push_back(GateStmt{mnemonic, std::nullopt, ref.name, ref.qubit});
    }

    void parse_u(Line& line) {
        const GateParams p = params4(line);
        const QuditRef ref = qudit_ref(line);
        line.end();
        resolve(line, ref);
        note_use(ref.name);
        ir_.statements.push_back(GateStmt{"u", p, ref.name, ref.qubit});
    }

    void parse_cu(Line& line) {
        const GateParams p = params4(line);
        std::vector<QuditRef> refs;
        refs.push_back(qudit_ref(line));
        while (line.peek().kind != Tok::kEnd)
            refs.push_back(qudit_ref(line));
        line.end();
        if (refs.size() < 2)
            line.fail_at(refs.back().name_tok, "cu needs at least one control and a target");

        std::vector<unsigned> controls;
        std::set<unsigned> seen;
        for (const auto& r : refs) {
            resolve(line, r);
            if (r.name != refs.front().name)
                line.fail_at(r.name_tok, "cu operands must reference one qudit");
            if (!seen.insert(r.qubit).second)
                line.fail_at(r.index_tok, "cu operands must be distinct qubits");
        }
        for (std::size_t i = 0; i + 1 < refs.size(); ++i)
            controls.push_back(refs[i].qubit);
        note_use(refs.front().name);
        ir_.statements.push_back(
            ControlledUStmt{refs.front().name, std::move(controls), refs.back().qubit, p});
    }

    void parse_cnot(Line& line) {
        const QuditRef a = qudit_ref(line);
        const QuditRef b = qudit_ref(line);
        line.end();
        resolve(line, a);
        resolve(line, b);
        if (a.name != b.name)
            line.fail_at(b.name_tok, "cnot operands must reference one qudit (use 'cz' across qudits)");
        if (a.qubit == b.qubit)
            line.fail_at(b.index_tok, "cnot control and target must differ");
        note_use(a.name);
        ir_.statements.push_back(CnotStmt{a.name, a.qubit, b.qubit});
    }

    void parse_toffoli(Line& line) {
        const QuditRef a = qudit_ref(line);
        const QuditRef b = qudit_ref(line);
        const QuditRef c = qudit_ref(line);
        line.end();
        resolve(line, a);
        resolve(line, b);
        resolve(line, c);
        if (a.name != b.name || a.name != c.name)
            line.fail_at(c.name_tok, "toffoli operands must reference one qudit");
        if (a.qubit == b.qubit || a.qubit == c.qubit || b.qubit == c.qubit)
            line.fail_at(c.index_tok, "toffoli operands must be distinct qubits");
        note_use(a.name);
        ir_.statements.push_back(ToffoliStmt{a.name, a.qubit, b.qubit, c.qubit});
    }

    void parse_qnd(Line& line) {
        const std::string spin = spin_ref(line);
        const QuditRef ref = qudit_ref(line);
        line.end();
        resolve(line, ref);
        note_use(ref.name);
        ir_.statements.push_back(QndStmt{spin, ref.name, ref.qubit});
    }

    void parse_cz(Line& line) {
        const std::string spin = spin_ref(line);
        const QuditRef a = qudit_ref(line);
        const QuditRef b = qudit_ref(line);
        line.end();
        resolve(line, a);
        resolve(line, b);
        if (a.name == b.name)
            line.fail_at(b.name_tok, "cz couples two distinct qudits (use 'cnot' within one)");
        note_use(a.name);
        note_use(b.name);
        ir_.statements.push_back(CrossCzStmt{spin, a.name, a.qubit, b.name, b.qubit});
    }

    void parse_prepare(Line& line) {
        const Tok name_tok = line.peek();
        const std::string name = line.ident("qudit name");
        const int idx = ir_.qudit_index(name);
        if (idx < 0)
            line.fail_at(name_tok, "unknown qudit '" + name + "'");
        const QuditDecl& q = ir_.qudits[static_cast<std::size_t>(idx)];
        if (used_.count(name) || prepared_.count(name))
            line.fail_at(name_tok, "prepare must be the first statement on qudit '" + name + "'");
        if (measured_.count(name))
            line.fail_at(name_tok, "qudit '" + name + "' was already measured");

        const Tok open = line.peek();
        line.expect(Tok::kLBrack, "'['");
        std::vector<Complex> amps;
        while (true) {
            const double re = line.number("real part");
            line.expect(Tok::kComma, "','");
            const double im = line.number("imaginary part");
            amps.emplace_back(re, im);
            if (line.peek().kind == Tok::kSemi) {
                line.expect(Tok::kSemi, "';'");
                continue;
            }
            break;
        }
        line.expect(Tok::kRBrack, "']'");
        line.end();

        const std::uint64_t want = std::uint64_t{1} << q.width;
        if (amps.size() != want)
            line.fail_at(open, "prepare needs " + std::to_string(want)
                                   + " amplitude pairs for width " + std::to_string(q.width)
                                   + ", got " + std::to_string(amps.size()));
        double sq = 0.0;
        for (const auto& a : amps)
            sq += std::norm(a);
        const double norm = std::sqrt(sq);
        if (std::abs(norm - 1.0) > 1e-3)
            line.fail_at(open, "prepare amplitudes are far from normalized (norm "
                                   + std::to_string(norm) + ")");
        // Rescale rounded literals; leave already-normalized vectors bit-exact
        // so serialize/parse round-trips.
        if (std::abs(norm - 1.0) > 1e-12)
            for (auto& a : amps)
                a /= norm;

        prepared_.insert(name);
        ir_.statements.push_back(PrepareStmt{name, std::move(amps)});
    }

    void parse_measure(Line& line) {
        const Tok name_tok = line.peek();
        const std::string name = line.ident("qudit name");
        line.end();
        if (ir_.qudit_index(name) < 0)
            line.fail_at(name_tok, "unknown qudit '" + name + "'");
        if (measured_.count(name))
            line.fail_at(name_tok, "qudit '" + name + "' was already measured");
        measured_.insert(name);
        ir_.statements.push_back(MeasureStmt{name});
    }

    std::string_view source_;
    CircuitIR ir_;
    std::set<std::string> names_;     // all declared identifiers
    std::set<std::string> used_;      // qudits touched by any statement
    std::set<std::string> prepared_;  // qudits with a prepare
    std::set<std::string> measured_;  // qudits already measured
};

}  // namespace

std::string ParseError::to_string() const {
    std::string s = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": "
                    + message;
    if (!token.empty())
        s += " (near '" + token + "')";
    return s;
}

ParseResult parse(std::string_view source) {
    try {
        return ParseResult{Parser(source).run(), std::nullopt};
    } catch (const Fail& f) {
        return ParseResult{std::nullopt, f.error};
    }
}

}  // namespace qloop
