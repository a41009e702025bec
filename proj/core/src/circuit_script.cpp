// Copyright 2026 The kerrsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kerrsim/circuit_script.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>

#include "kerrsim/jsonfmt.hpp"

namespace kerrsim {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;  // 1-based
};

std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t begin = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            tokens.push_back(Token{std::string(line.substr(begin, i - begin)), line_no, begin + 1});
        }
        if (!tokens.empty()) {
            lines.push_back(std::move(tokens));
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
        ++line_no;
    }
    return lines;
}

double parse_double_token(const Token& tok) {
    const char* begin = tok.text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + tok.text.size() || tok.text.empty() || !std::isfinite(value)) {
        throw ParseError(tok.line, tok.column, "expected a number", tok.text);
    }
    return value;
}

std::size_t parse_index_token(const Token& tok) {
    if (tok.text.empty() || tok.text.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(tok.line, tok.column, "expected a non-negative integer", tok.text);
    }
    return static_cast<std::size_t>(std::strtoull(tok.text.c_str(), nullptr, 10));
}

Complex parse_complex_token(const Token& tok) {
    try {
        return parse_complex_literal(tok.text);
    } catch (const Error& e) {
        throw ParseError(tok.line, tok.column, e.what(), tok.text);
    }
}

Angle parse_angle_token(const Token& tok) {
    const std::string& s = tok.text;
    const std::size_t rational = s.find("pi/");
    if (rational != std::string::npos) {
        const std::string num = s.substr(0, rational);
        const std::string den = s.substr(rational + 3);
        auto is_integer = [](const std::string& t, bool allow_sign) {
            std::size_t start = 0;
            if (allow_sign && !t.empty() && (t[0] == '+' || t[0] == '-')) {
                start = 1;
            }
            return start < t.size() &&
                   t.find_first_not_of("0123456789", start) == std::string::npos;
        };
        double numerator = 1.0;
        if (num == "-") {
            numerator = -1.0;
        } else if (!num.empty() && num != "+") {
            if (!is_integer(num, true)) {
                throw ParseError(tok.line, tok.column, "expected an angle like 1pi/4", tok.text);
            }
            numerator = std::strtod(num.c_str(), nullptr);
        }
        if (!is_integer(den, false)) {
            throw ParseError(tok.line, tok.column, "expected an angle like 1pi/4", tok.text);
        }
        const double denominator = std::strtod(den.c_str(), nullptr);
        if (denominator == 0.0) {
            throw ParseError(tok.line, tok.column, "zero denominator in angle", tok.text);
        }
        return Angle::pi_multiple(numerator / denominator);
    }
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        const std::string prefix = s.substr(0, s.size() - 2);
        if (prefix.empty() || prefix == "+") {
            return Angle::pi_multiple(1.0);
        }
        if (prefix == "-") {
            return Angle::pi_multiple(-1.0);
        }
        Token t{prefix, tok.line, tok.column};
        return Angle::pi_multiple(parse_double_token(t));
    }
    return Angle::radians(parse_double_token(tok));
}

bool valid_name(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) {
        return false;
    }
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

void expect_argc(const std::vector<Token>& tokens, std::size_t argc) {
    if (tokens.size() != argc + 1) {
        throw ParseError(tokens[0].line, tokens[0].column,
                         "'" + tokens[0].text + "' takes " + std::to_string(argc) + " argument" +
                             (argc == 1 ? "" : "s") + ", got " +
                             std::to_string(tokens.size() - 1),
                         tokens[0].text);
    }
}

/// Whole-program semantic checks; throws ValidationError on the first hit.
void validate(const CircuitProgram& program, const std::vector<Token>& statement_heads) {
    if (program.mode_count == 0) {
        throw ValidationError(1, 1, "program declares no modes");
    }
    std::map<std::string, std::size_t> qubit_of;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> mode_used;

    auto fail = [&](std::size_t i, const std::string& msg) {
        const Token& head = statement_heads[i];
        throw ValidationError(head.line, head.column, msg, head.text);
    };
    auto check_mode = [&](std::size_t i, std::size_t mode) {
        if (mode >= program.mode_count) {
            fail(i, "mode " + std::to_string(mode) + " out of range for " +
                        std::to_string(program.mode_count) + " modes");
        }
    };
    auto qubit_index = [&](std::size_t i, const std::string& name) {
        auto it = qubit_of.find(name);
        if (it == qubit_of.end()) {
            fail(i, "undeclared qubit '" + name + "'");
        }
        return it->second;
    };

    mode_used.assign(program.mode_count, false);
    std::vector<int> x_count;  // measx statements seen so far, per qubit
    std::vector<std::pair<Complex, Complex>> preps;

    for (std::size_t i = 0; i < program.statements.size(); ++i) {
        const Statement& st = program.statements[i];
        switch (st.kind) {
            case Statement::Kind::DefQubit: {
                if (qubit_of.count(st.qubit_name)) {
                    fail(i, "duplicate qubit '" + st.qubit_name + "'");
                }
                check_mode(i, st.mode_a);
                check_mode(i, st.mode_b);
                if (st.mode_a == st.mode_b) {
                    fail(i, "qubit needs two distinct modes");
                }
                if (mode_used[st.mode_a] || mode_used[st.mode_b]) {
                    fail(i, "qubit modes overlap an earlier qubit");
                }
                mode_used[st.mode_a] = mode_used[st.mode_b] = true;
                qubit_of[st.qubit_name] = pairs.size();
                pairs.emplace_back(st.mode_a, st.mode_b);
                x_count.push_back(0);
                preps.push_back({Complex{0.0}, Complex{0.0}});
                break;
            }
            case Statement::Kind::Source:
                check_mode(i, st.mode_a);
                break;
            case Statement::Kind::BeamSplitter: {
                check_mode(i, st.mode_a);
                check_mode(i, st.mode_b);
                if (st.mode_a == st.mode_b) {
                    fail(i, "beam splitter needs two distinct modes");
                }
                if (st.bs_form == Statement::BsForm::Prep) {
                    if (std::abs(std::norm(st.prep_alpha) + std::norm(st.prep_beta) - 1.0) >
                        kNormTolerance) {
                        fail(i, "prep amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
                    }
                    for (std::size_t q = 0; q < pairs.size(); ++q) {
                        if (pairs[q] == std::make_pair(st.mode_a, st.mode_b)) {
                            preps[q] = {st.prep_alpha, st.prep_beta};
                        }
                    }
                } else if (st.bs_form == Statement::BsForm::Matrix) {
                    const Mat2 m{st.matrix[0], st.matrix[1], st.matrix[2], st.matrix[3]};
                    if (!is_unitary(m)) {
                        fail(i, "beam splitter matrix is not unitary within 1e-12");
                    }
                }
                break;
            }
            case Statement::Kind::Kerr:
                check_mode(i, st.mode_a);
                check_mode(i, st.mode_b);
                if (st.mode_a == st.mode_b) {
                    fail(i, "kerr gate needs two distinct modes (self-interaction forbidden)");
                }
                break;
            case Statement::Kind::MeasureX:
                ++x_count[qubit_index(i, st.qubit_name)];
                break;
            case Statement::Kind::MeasureZ:
                qubit_index(i, st.qubit_name);
                break;
            case Statement::Kind::Correct: {
                const std::size_t target = qubit_index(i, st.qubit_name);
                if (x_count[target] != 0) {
                    fail(i, "correction target '" + st.qubit_name + "' was already measured");
                }
                if (st.table == CorrectionKind::Teleport) {
                    if (target + 1 != pairs.size()) {
                        fail(i, "teleport correction target must be the last declared qubit");
                    }
                    for (std::size_t q = 0; q + 1 < pairs.size(); ++q) {
                        if (x_count[q] != 1) {
                            fail(i, "teleport correction needs exactly one prior measx on "
                                    "every other qubit");
                        }
                    }
                    if (preps[0] == std::make_pair(Complex{0.0}, Complex{0.0})) {
                        fail(i, "teleport correction needs a prep beam splitter on the input "
                                "qubit");
                    }
                } else if (st.table == CorrectionKind::Cnot) {
                    if (pairs.size() != 4) {
                        fail(i, "cnot correction needs exactly 4 declared qubits");
                    }
                    if (target != 2) {
                        fail(i, "cnot correction target must be the third declared qubit");
                    }
                    if (x_count[0] != 1 || x_count[1] != 1) {
                        fail(i, "cnot correction needs one prior measx on each of the first two "
                                "qubits");
                    }
                    if (preps[0] == std::make_pair(Complex{0.0}, Complex{0.0}) ||
                        preps[3] == std::make_pair(Complex{0.0}, Complex{0.0})) {
                        fail(i, "cnot correction needs prep beam splitters on qubits 1 and 4");
                    }
                }
                break;
            }
        }
    }
}

}  // namespace

Complex parse_complex_literal(const std::string& token) {
    if (token.empty()) {
        throw Error("empty complex literal");
    }
    auto parse_real = [](const std::string& s) {
        const char* begin = s.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (s.empty() || end != begin + s.size() || !std::isfinite(v)) {
            throw Error("malformed complex literal component '" + s + "'");
        }
        return v;
    };

    // Split at the last sign that does not follow an exponent marker.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < token.size(); ++i) {
        const char c = token[i];
        if ((c == '+' || c == '-') && token[i - 1] != 'e' && token[i - 1] != 'E') {
            split = i;
        }
    }
    if (token.back() == 'i') {
        std::string im_part = token.substr(0, token.size() - 1);
        double re = 0.0;
        if (split != std::string::npos) {
            re = parse_real(token.substr(0, split));
            im_part = token.substr(split, token.size() - split - 1);
        }
        double im;
        if (im_part.empty() || im_part == "+") {
            im = 1.0;
        } else if (im_part == "-") {
            im = -1.0;
        } else {
            im = parse_real(im_part);
        }
        return {re, im};
    }
    return {parse_real(token), 0.0};
}

std::string format_complex_literal(Complex z) {
    if (z.imag() == 0.0) {
        return format_double_roundtrip(z.real());
    }
    if (z.real() == 0.0) {
        return format_double_roundtrip(z.imag()) + "i";
    }
    std::string out = format_double_roundtrip(z.real());
    if (z.imag() >= 0.0) {
        out += "+";
    }
    out += format_double_roundtrip(z.imag()) + "i";
    return out;
}

CircuitProgram parse_circuit(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "empty program: expected a 'modes' declaration");
    }

    CircuitProgram program;
    std::vector<Token> statement_heads;
    bool saw_modes = false;
    bool saw_cutoff = false;

    for (const auto& tokens : lines) {
        const Token& head = tokens[0];
        const std::string& kw = head.text;

        if (kw == "modes") {
            expect_argc(tokens, 1);
            if (saw_modes) {
                throw ParseError(head.line, head.column, "duplicate 'modes' declaration");
            }
            program.mode_count = parse_index_token(tokens[1]);
            if (program.mode_count == 0) {
                throw ValidationError(tokens[1].line, tokens[1].column,
                                      "mode count must be at least 1", tokens[1].text);
            }
            saw_modes = true;
            continue;
        }
        if (!saw_modes) {
            throw ParseError(head.line, head.column, "first statement must be 'modes <count>'",
                             kw);
        }
        if (kw == "cutoff") {
            expect_argc(tokens, 1);
            if (saw_cutoff) {
                throw ParseError(head.line, head.column, "duplicate 'cutoff' declaration");
            }
            if (!program.statements.empty()) {
                throw ParseError(head.line, head.column,
                                 "'cutoff' must appear before circuit statements");
            }
            const std::size_t c = parse_index_token(tokens[1]);
            if (c == 0) {
                throw ValidationError(tokens[1].line, tokens[1].column,
                                      "cutoff must be at least 1", tokens[1].text);
            }
            program.cutoff = static_cast<int>(c);
            saw_cutoff = true;
            continue;
        }

        Statement st;
        st.line = head.line;
        if (kw == "qubit") {
            expect_argc(tokens, 3);
            st.kind = Statement::Kind::DefQubit;
            if (!valid_name(tokens[1].text)) {
                throw ParseError(tokens[1].line, tokens[1].column, "invalid qubit name",
                                 tokens[1].text);
            }
            st.qubit_name = tokens[1].text;
            st.mode_a = parse_index_token(tokens[2]);
            st.mode_b = parse_index_token(tokens[3]);
        } else if (kw == "source") {
            expect_argc(tokens, 1);
            st.kind = Statement::Kind::Source;
            st.mode_a = parse_index_token(tokens[1]);
        } else if (kw == "bs") {
            if (tokens.size() < 4) {
                expect_argc(tokens, 3);
            }
            st.kind = Statement::Kind::BeamSplitter;
            st.mode_a = parse_index_token(tokens[1]);
            st.mode_b = parse_index_token(tokens[2]);
            const std::string& form = tokens[3].text;
            if (form == "h") {
                expect_argc(tokens, 3);
                st.bs_form = Statement::BsForm::Hadamard;
            } else if (form == "prep") {
                expect_argc(tokens, 5);
                st.bs_form = Statement::BsForm::Prep;
                st.prep_alpha = parse_complex_token(tokens[4]);
                st.prep_beta = parse_complex_token(tokens[5]);
            } else if (form == "mat") {
                expect_argc(tokens, 7);
                st.bs_form = Statement::BsForm::Matrix;
                for (std::size_t k = 0; k < 4; ++k) {
                    st.matrix[k] = parse_complex_token(tokens[4 + k]);
                }
            } else {
                throw ParseError(tokens[3].line, tokens[3].column,
                                 "expected 'h', 'prep' or 'mat'", form);
            }
        } else if (kw == "kerr") {
            expect_argc(tokens, 3);
            st.kind = Statement::Kind::Kerr;
            st.mode_a = parse_index_token(tokens[1]);
            st.mode_b = parse_index_token(tokens[2]);
            st.angle = parse_angle_token(tokens[3]);
        } else if (kw == "measx" || kw == "measz") {
            expect_argc(tokens, 1);
            st.kind = kw == "measx" ? Statement::Kind::MeasureX : Statement::Kind::MeasureZ;
            st.qubit_name = tokens[1].text;
        } else if (kw == "correct") {
            expect_argc(tokens, 2);
            st.kind = Statement::Kind::Correct;
            st.qubit_name = tokens[1].text;
            if (tokens[2].text == "teleport") {
                st.table = CorrectionKind::Teleport;
            } else if (tokens[2].text == "cnot") {
                st.table = CorrectionKind::Cnot;
            } else {
                throw ParseError(tokens[2].line, tokens[2].column,
                                 "expected 'teleport' or 'cnot'", tokens[2].text);
            }
        } else {
            throw ParseError(head.line, head.column, "unknown statement", kw);
        }
        program.statements.push_back(std::move(st));
        statement_heads.push_back(head);
    }

    validate(program, statement_heads);
    return program;
}

std::string format_circuit(const CircuitProgram& program) {
    std::string out;
    out += "modes " + std::to_string(program.mode_count) + "\n";
    out += "cutoff " + std::to_string(program.cutoff) + "\n";
    auto angle_text = [](const Angle& a) {
        if (a.kind == Angle::Kind::PiMultiple) {
            return format_double_roundtrip(a.value) + "pi";
        }
        return format_double_roundtrip(a.value);
    };
    for (const Statement& st : program.statements) {
        switch (st.kind) {
            case Statement::Kind::DefQubit:
                out += "qubit " + st.qubit_name + " " + std::to_string(st.mode_a) + " " +
                       std::to_string(st.mode_b);
                break;
            case Statement::Kind::Source:
                out += "source " + std::to_string(st.mode_a);
                break;
            case Statement::Kind::BeamSplitter:
                out += "bs " + std::to_string(st.mode_a) + " " + std::to_string(st.mode_b);
                if (st.bs_form == Statement::BsForm::Hadamard) {
                    out += " h";
                } else if (st.bs_form == Statement::BsForm::Prep) {
                    out += " prep " + format_complex_literal(st.prep_alpha) + " " +
                           format_complex_literal(st.prep_beta);
                } else {
                    out += " mat";
                    for (const auto& entry : st.matrix) {
                        out += " " + format_complex_literal(entry);
                    }
                }
                break;
            case Statement::Kind::Kerr:
                out += "kerr " + std::to_string(st.mode_a) + " " + std::to_string(st.mode_b) +
                       " " + angle_text(st.angle);
                break;
            case Statement::Kind::MeasureX:
                out += "measx " + st.qubit_name;
                break;
            case Statement::Kind::MeasureZ:
                out += "measz " + st.qubit_name;
                break;
            case Statement::Kind::Correct:
                out += "correct " + st.qubit_name + " " +
                       (st.table == CorrectionKind::Teleport ? "teleport" : "cnot");
                break;
        }
        out += "\n";
    }
    return out;
}

OpticalProtocol compile_circuit(const CircuitProgram& program) {
    OpticalProtocol proto;
    proto.mode_count = program.mode_count;
    proto.cutoff = program.cutoff;

    std::map<std::string, std::size_t> qubit_of;
    for (const Statement& st : program.statements) {
        if (st.kind == Statement::Kind::DefQubit) {
            qubit_of[st.qubit_name] = proto.reg.pairs.size();
            proto.reg.pairs.emplace_back(st.mode_a, st.mode_b);
            proto.preps.push_back({Complex{0.0}, Complex{0.0}});
        }
    }

    for (const Statement& st : program.statements) {
        Element el{Element::Kind::Source};
        el.source_line = st.line;
        switch (st.kind) {
            case Statement::Kind::DefQubit:
                continue;
            case Statement::Kind::Source:
                el.kind = Element::Kind::Source;
                el.mode = st.mode_a;
                break;
            case Statement::Kind::BeamSplitter: {
                el.kind = Element::Kind::BeamSplitter;
                Mat2 m;
                if (st.bs_form == Statement::BsForm::Hadamard) {
                    m = hadamard_bs();
                } else if (st.bs_form == Statement::BsForm::Prep) {
                    m = qubit_prep(st.prep_alpha, st.prep_beta);
                    for (std::size_t q = 0; q < proto.reg.pairs.size(); ++q) {
                        if (proto.reg.pairs[q] == std::make_pair(st.mode_a, st.mode_b)) {
                            proto.preps[q] = {st.prep_alpha, st.prep_beta};
                        }
                    }
                } else {
                    m = Mat2{st.matrix[0], st.matrix[1], st.matrix[2], st.matrix[3]};
                }
                el.bs = {st.mode_a, st.mode_b, m};
                break;
            }
            case Statement::Kind::Kerr:
                el.kind = Element::Kind::Kerr;
                el.kerr = {st.mode_a, st.mode_b, st.angle.as_radians()};
                break;
            case Statement::Kind::MeasureX:
            case Statement::Kind::MeasureZ:
                el.kind = st.kind == Statement::Kind::MeasureX ? Element::Kind::MeasureX
                                                               : Element::Kind::MeasureZ;
                el.qubit = qubit_of.at(st.qubit_name);
                break;
            case Statement::Kind::Correct:
                el.kind = Element::Kind::Correct;
                el.qubit = qubit_of.at(st.qubit_name);
                el.correction = st.table;
                proto.correction = st.table;
                proto.correction_target = el.qubit;
                break;
        }
        proto.elements.push_back(el);
    }

    if (proto.correction == CorrectionKind::Teleport) {
        proto.input_qubit = 0;
        proto.input_json = teleport_input_json(proto.preps[0].first, proto.preps[0].second,
                                               proto.reg.qubit_count());
    } else if (proto.correction == CorrectionKind::Cnot) {
        proto.input_qubit = 0;
        proto.control_qubit = 3;
        proto.input_json = cnot_input_json(proto.preps[0], proto.preps[3]);
    }
    return proto;
}

std::vector<ProtocolResult> execute_circuit(const CircuitProgram& program,
                                            const BranchPolicy& policy, double tolerance) {
    return run_protocol(compile_circuit(program), policy, tolerance);
}

}  // namespace kerrsim
