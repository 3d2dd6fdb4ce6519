// Copyright 2026 The qfp Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfp/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>

#include "qfp/errors.hpp"

namespace qfp {

namespace {

enum class Tok { Ident, Number, String, Symbol, Arrow, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') {
                ++i;
            }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                      src[i] == '_')) {
                ++i;
            }
            out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), line});
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = i;
            while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) ||
                                      src[i] == '.')) {
                ++i;
            }
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                ++i;
                if (i < src.size() && (src[i] == '+' || src[i] == '-')) {
                    ++i;
                }
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                    ++i;
                }
            }
            out.push_back({Tok::Number, std::string(src.substr(start, i - start)), line});
        } else if (c == '"') {
            const std::size_t start = ++i;
            while (i < src.size() && src[i] != '"' && src[i] != '\n') {
                ++i;
            }
            if (i >= src.size() || src[i] != '"') {
                throw ParseError("unterminated string", line);
            }
            out.push_back({Tok::String, std::string(src.substr(start, i - start)), line});
            ++i;
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", line});
            i += 2;
        } else if (std::string_view("[](),;+-*/").find(c) != std::string_view::npos) {
            out.push_back({Tok::Symbol, std::string(1, c), line});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line);
        }
    }
    out.push_back({Tok::End, "", line});
    return out;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    QasmProgram parse() {
        expect_ident("OPENQASM");
        const Token version = next();
        if (version.kind != Tok::Number || version.text != "2.0") {
            throw ParseError("only OPENQASM 2.0 is supported", version.line);
        }
        expect_symbol(";");
        bool have_qreg = false;
        while (peek().kind != Tok::End) {
            const Token head = next();
            if (head.kind != Tok::Ident) {
                throw ParseError("expected a statement, got '" + head.text + "'", head.line);
            }
            if (head.text == "include") {
                const Token file = next();
                if (file.kind != Tok::String) {
                    throw ParseError("include expects a file name", file.line);
                }
                expect_symbol(";");
            } else if (head.text == "qreg" || head.text == "creg") {
                const Token name = expect_kind(Tok::Ident, "register name");
                expect_symbol("[");
                const std::size_t size = expect_size();
                expect_symbol("]");
                expect_symbol(";");
                if (head.text == "qreg") {
                    if (have_qreg) {
                        throw ParseError("only one qreg is supported", head.line);
                    }
                    have_qreg = true;
                    qreg_ = name.text;
                    prog_.circuit.num_qubits = size;
                } else {
                    if (creg_) {
                        throw ParseError("only one creg is supported", head.line);
                    }
                    creg_ = name.text;
                    prog_.num_clbits = size;
                }
            } else if (head.text == "measure") {
                const Qubit q = qubit_arg();
                expect_kind(Tok::Arrow, "'->'");
                const Token name = expect_kind(Tok::Ident, "classical register");
                if (!creg_ || name.text != *creg_) {
                    throw ParseError("unknown classical register '" + name.text + "'", name.line);
                }
                expect_symbol("[");
                const std::size_t bit = expect_size();
                if (bit >= prog_.num_clbits) {
                    throw ParseError("classical bit out of range", name.line);
                }
                expect_symbol("]");
                expect_symbol(";");
                prog_.measurements.push_back({q, bit});
            } else if (head.text == "barrier") {
                qubit_arg();
                while (accept_symbol(",")) {
                    qubit_arg();
                }
                expect_symbol(";");
            } else {
                if (!have_qreg) {
                    throw ParseError("gate before qreg declaration", head.line);
                }
                gate_statement(head);
            }
        }
        return std::move(prog_);
    }

  private:
    const Token &peek() const { return toks_[pos_]; }
    Token next() {
        const Token t = toks_[pos_];
        if (t.kind != Tok::End) {
            ++pos_;
        }
        return t;
    }
    bool accept_symbol(std::string_view s) {
        if (peek().kind == Tok::Symbol && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_symbol(std::string_view s) {
        if (!accept_symbol(s)) {
            throw ParseError("expected '" + std::string(s) + "', got '" + peek().text + "'",
                             peek().line);
        }
    }
    Token expect_kind(Tok kind, std::string_view what) {
        if (peek().kind != kind) {
            throw ParseError("expected " + std::string(what) + ", got '" + peek().text + "'",
                             peek().line);
        }
        return next();
    }
    void expect_ident(std::string_view name) {
        const Token t = next();
        if (t.kind != Tok::Ident || t.text != name) {
            throw ParseError("expected '" + std::string(name) + "'", t.line);
        }
    }
    std::size_t expect_size() {
        const Token t = expect_kind(Tok::Number, "an integer");
        if (t.text.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("expected an integer, got '" + t.text + "'", t.line);
        }
        return static_cast<std::size_t>(std::stoull(t.text));
    }

    Qubit qubit_arg() {
        const Token name = expect_kind(Tok::Ident, "qubit register");
        if (name.text != qreg_) {
            throw ParseError("unknown quantum register '" + name.text + "'", name.line);
        }
        if (peek().kind != Tok::Symbol || peek().text != "[") {
            throw ParseError("whole-register arguments are not supported", name.line);
        }
        expect_symbol("[");
        const std::size_t q = expect_size();
        expect_symbol("]");
        if (q >= prog_.circuit.num_qubits) {
            throw ParseError("qubit index " + std::to_string(q) + " out of range", name.line);
        }
        return q;
    }

    double expression() {
        double v = term();
        while (true) {
            if (accept_symbol("+")) {
                v += term();
            } else if (accept_symbol("-")) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    double term() {
        double v = factor();
        while (true) {
            if (accept_symbol("*")) {
                v *= factor();
            } else if (accept_symbol("/")) {
                v /= factor();
            } else {
                return v;
            }
        }
    }
    double factor() {
        if (accept_symbol("-")) {
            return -factor();
        }
        if (accept_symbol("+")) {
            return factor();
        }
        if (accept_symbol("(")) {
            const double v = expression();
            expect_symbol(")");
            return v;
        }
        const Token t = next();
        if (t.kind == Tok::Number) {
            char *end = nullptr;
            const double v = std::strtod(t.text.c_str(), &end);
            if (end == nullptr || *end != '\0') {
                throw ParseError("malformed number '" + t.text + "'", t.line);
            }
            return v;
        }
        if (t.kind == Tok::Ident && t.text == "pi") {
            return std::numbers::pi;
        }
        throw ParseError("malformed expression near '" + t.text + "'", t.line);
    }

    void gate_statement(const Token &head) {
        struct Spec {
            std::size_t params;
            std::size_t qubits;
        };
        static const std::map<std::string, Spec> known = {
            {"h", {0, 1}},  {"x", {0, 1}},   {"z", {0, 1}},  {"s", {0, 1}},
            {"sdg", {0, 1}}, {"t", {0, 1}},  {"tdg", {0, 1}}, {"ry", {1, 1}},
            {"rz", {1, 1}}, {"u1", {1, 1}},  {"cx", {0, 2}}, {"cz", {0, 2}},
        };
        const auto it = known.find(head.text);
        if (it == known.end()) {
            throw ParseError("unsupported gate '" + head.text + "'", head.line);
        }
        std::vector<double> params;
        if (accept_symbol("(")) {
            params.push_back(expression());
            while (accept_symbol(",")) {
                params.push_back(expression());
            }
            expect_symbol(")");
        }
        if (params.size() != it->second.params) {
            throw ParseError("gate '" + head.text + "' takes " +
                                 std::to_string(it->second.params) + " parameters",
                             head.line);
        }
        std::vector<Qubit> qs{qubit_arg()};
        while (accept_symbol(",")) {
            qs.push_back(qubit_arg());
        }
        expect_symbol(";");
        if (qs.size() != it->second.qubits) {
            throw ParseError("gate '" + head.text + "' takes " +
                                 std::to_string(it->second.qubits) + " qubits",
                             head.line);
        }
        if (qs.size() == 2 && qs[0] == qs[1]) {
            throw ParseError("control and target coincide", head.line);
        }

        const double pi = std::numbers::pi;
        const std::string &g = head.text;
        GateOp op = GateOp::h(qs.back());
        if (g == "h") {
            op = GateOp::h(qs[0]);
        } else if (g == "x") {
            op = GateOp::x(qs[0]);
        } else if (g == "z") {
            op = GateOp::phase(qs[0], pi);
        } else if (g == "s") {
            op = GateOp::phase(qs[0], pi / 2);
        } else if (g == "sdg") {
            op = GateOp::phase(qs[0], -pi / 2);
        } else if (g == "t") {
            op = GateOp::phase(qs[0], pi / 4);
        } else if (g == "tdg") {
            op = GateOp::phase(qs[0], -pi / 4);
        } else if (g == "ry") {
            op = GateOp::u(qs[0], params[0]);
        } else if (g == "rz") {
            op = GateOp::rz(qs[0], params[0]);
        } else if (g == "u1") {
            op = GateOp::phase(qs[0], params[0]);
        } else if (g == "cx") {
            op = GateOp::x(qs[1], {{qs[0], true}});
        } else if (g == "cz") {
            op = GateOp::phase(qs[1], pi, {{qs[0], true}});
        }
        prog_.circuit.add(std::move(op));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    QasmProgram prog_;
    std::string qreg_;
    std::optional<std::string> creg_;
};

} // namespace

QasmProgram parse_qasm(std::string_view text) {
    return Parser(tokenize(text)).parse();
}

} // namespace qfp
