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

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "kerrsim/circuit_script.hpp"
#include "test_util.hpp"

using namespace kerrsim;
using namespace kerrsim::test;

TEST_SUITE_BEGIN("circuit_script");

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kTeleportPath = std::string(KERRSIM_SOURCE_DIR) + "/circuits/teleport3.qc";
const std::string kCnotPath = std::string(KERRSIM_SOURCE_DIR) + "/circuits/cnot.qc";

}  // namespace

TEST_CASE("complex literals") {
    CHECK(parse_complex_literal("0.6") == Complex{0.6, 0.0});
    CHECK(parse_complex_literal("0.8i") == Complex{0.0, 0.8});
    CHECK(parse_complex_literal("0.6+0.8i") == Complex{0.6, 0.8});
    CHECK(parse_complex_literal("0.6-0.8i") == Complex{0.6, -0.8});
    CHECK(parse_complex_literal("-1") == Complex{-1.0, 0.0});
    CHECK(parse_complex_literal("i") == Complex{0.0, 1.0});
    CHECK(parse_complex_literal("-i") == Complex{0.0, -1.0});
    CHECK(parse_complex_literal("1e-3i") == Complex{0.0, 1e-3});
    CHECK(parse_complex_literal("1e-3+2e-4i") == Complex{1e-3, 2e-4});

    CHECK_THROWS_AS(parse_complex_literal(""), Error);
    CHECK_THROWS_AS(parse_complex_literal("0.6+"), Error);
    CHECK_THROWS_AS(parse_complex_literal("x2"), Error);
    CHECK_THROWS_AS(parse_complex_literal("1+2"), Error);

    // format -> parse round trip is exact.
    std::mt19937_64 rng(61);
    for (int k = 0; k < 50; ++k) {
        const auto [a, b] = random_qubit(rng);
        CHECK(parse_complex_literal(format_complex_literal(a)) == a);
        CHECK(parse_complex_literal(format_complex_literal(b)) == b);
    }
}

TEST_CASE("shipped teleport circuit parses and matches the native runner") {
    const CircuitProgram program = parse_circuit(read_file(kTeleportPath));
    CHECK(program.mode_count == 6);
    CHECK(program.cutoff == 1);

    const OpticalProtocol compiled = compile_circuit(program);
    const auto from_script = run_protocol(compiled, BranchPolicy::enumerate_all());

    const OpticalProtocol native =
        teleport_protocol(Complex{0.6, 0.0}, Complex{0.0, 0.8}, 3);
    const auto from_runner = run_protocol(native, BranchPolicy::enumerate_all());

    CHECK(report_to_json(compiled, from_script) == report_to_json(native, from_runner));
}

TEST_CASE("shipped cnot circuit matches the native runner") {
    const CircuitProgram program = parse_circuit(read_file(kCnotPath));
    const OpticalProtocol compiled = compile_circuit(program);
    const OpticalProtocol native = cnot_protocol(0, 0);
    CHECK(report_to_json(compiled, run_protocol(compiled, BranchPolicy::enumerate_all())) ==
          report_to_json(native, run_protocol(native, BranchPolicy::enumerate_all())));
}

TEST_CASE("format is canonical and parse-stable") {
    for (const auto& path : {kTeleportPath, kCnotPath}) {
        const CircuitProgram program = parse_circuit(read_file(path));
        const std::string canonical = format_circuit(program);
        const CircuitProgram reparsed = parse_circuit(canonical);
        CHECK(reparsed == program);
        CHECK(format_circuit(reparsed) == canonical);
    }

    // Comment and whitespace variants format identically.
    const char* spaced = "modes 2\nqubit q 0 1\nsource 1\nbs 0 1 h\n";
    const char* noisy =
        "  modes   2   # header\n\n# define\n\tqubit q 0 1\nsource 1  # fire\n   bs 0 1 h\n";
    CHECK(format_circuit(parse_circuit(spaced)) == format_circuit(parse_circuit(noisy)));
}

TEST_CASE("pi angles survive formatting bit for bit") {
    const CircuitProgram a = parse_circuit("modes 2\nkerr 0 1 1pi/4\n");
    const CircuitProgram b = parse_circuit("modes 2\nkerr 0 1 0.25pi\n");
    CHECK(a == b);
    CHECK(a.statements[0].angle.kind == Angle::Kind::PiMultiple);
    CHECK(a.statements[0].angle.value == 0.25);
    CHECK(format_circuit(a).find("kerr 0 1 0.25pi") != std::string::npos);

    const CircuitProgram thirds = parse_circuit("modes 2\nkerr 0 1 -2pi/3\n");
    const CircuitProgram reparsed = parse_circuit(format_circuit(thirds));
    CHECK(reparsed.statements[0].angle.value == thirds.statements[0].angle.value);

    // Bare pi forms and signs.
    CHECK(parse_circuit("modes 2\nkerr 0 1 pi\n").statements[0].angle.value == 1.0);
    CHECK(parse_circuit("modes 2\nkerr 0 1 -pi/2\n").statements[0].angle.value == -0.5);
    CHECK_THROWS_AS(parse_circuit("modes 2\nkerr 0 1 1-2pi/4\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("modes 2\nkerr 0 1 1pi/0\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("modes 2\nkerr 0 1 1.5pi/4\n"), ParseError);

    const CircuitProgram raw = parse_circuit("modes 2\nkerr 0 1 0.785398\n");
    CHECK(raw.statements[0].angle.kind == Angle::Kind::Radians);
    CHECK(parse_circuit(format_circuit(raw)) == raw);
}

TEST_CASE("validation failures carry positions") {
    auto check_validation = [](const char* text, const char* fragment) {
        try {
            parse_circuit(text);
            FAIL_CHECK("expected ValidationError for: " << text);
        } catch (const ValidationError& e) {
            CHECK(e.line >= 1);
            CHECK(e.column >= 1);
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    check_validation("modes 6\nkerr 0 0 0.785\n", "self-interaction");
    check_validation("modes 6\nbs 0 9 h\n", "out of range");
    check_validation("modes 2\nqubit q 0 1\nqubit q 0 1\n", "duplicate qubit");
    check_validation("modes 4\nqubit a 0 1\nqubit b 1 2\n", "overlap");
    check_validation("modes 2\nmeasx q\n", "undeclared qubit");
    check_validation("modes 2\nbs 0 1 prep 1 1\n", "prep amplitudes");
    check_validation("modes 2\nbs 0 1 mat 1 1 1 1\n", "not unitary");
    check_validation("modes 2\nqubit q 0 1\ncorrect q teleport\n", "prep beam splitter");
    check_validation(
        "modes 4\nqubit a 0 1\nqubit b 2 3\nsource 1\nbs 0 1 prep 1 0\ncorrect b teleport\n",
        "measx");
    check_validation("modes 4\nqubit a 0 1\nqubit b 2 3\nmeasx a\ncorrect b cnot\n",
                     "4 declared qubits");
    check_validation("modes 2\ncutoff 0\n", "cutoff");
}

TEST_CASE("syntax failures carry positions") {
    auto check_parse = [](const char* text) {
        try {
            parse_circuit(text);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ValidationError&) {
            FAIL_CHECK("expected ParseError, got ValidationError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line >= 1);
            CHECK(e.column >= 1);
        }
    };
    check_parse("");
    check_parse("qubit q 0 1\n");             // modes must come first
    check_parse("modes\n");                   // missing argument
    check_parse("modes 2\nmodes 2\n");        // duplicate
    check_parse("modes 2\nwiggle 0\n");       // unknown keyword
    check_parse("modes 2\nsource x\n");       // bad integer
    check_parse("modes 2\nkerr 0 1 fast\n");  // bad angle
    check_parse("modes 2\nbs 0 1 prep 0.6\n");
    check_parse("modes 2\nbs 0 1 spin\n");
    check_parse("modes 2\nqubit q 0 1\ncorrect q nothing\n");
    check_parse("modes 2\nsource 0\ncutoff 2\n");  // cutoff after statements
}

TEST_CASE("fuzzed sources never escape as raw crashes") {
    const std::string seedfile = read_file(kTeleportPath);
    std::mt19937_64 rng(67);
    int parsed_ok = 0;
    for (int k = 0; k < 300; ++k) {
        std::string mutated = seedfile;
        const std::size_t edits = 1 + rng() % 4;
        for (std::size_t e = 0; e < edits; ++e) {
            const std::size_t pos = rng() % mutated.size();
            switch (rng() % 3) {
                case 0:
                    mutated[pos] = static_cast<char>(' ' + rng() % 95);
                    break;
                case 1:
                    mutated.erase(pos, 1 + rng() % 3);
                    break;
                default:
                    mutated.insert(pos, std::string(1 + rng() % 3,
                                                    static_cast<char>(' ' + rng() % 95)));
                    break;
            }
        }
        try {
            parse_circuit(mutated);
            ++parsed_ok;
        } catch (const ParseError& e) {
            CHECK(e.line >= 1);
            CHECK(e.line <= 1 + std::count(mutated.begin(), mutated.end(), '\n') + 1);
            CHECK(e.column >= 1);
        }
    }
    CHECK(parsed_ok < 300);  // the corpus really exercises the error paths
}

TEST_CASE("random structural programs round trip") {
    std::mt19937_64 rng(71);
    for (int k = 0; k < 50; ++k) {
        CircuitProgram program;
        const std::size_t qubits = 1 + rng() % 3;
        program.mode_count = 2 * qubits + rng() % 3;
        program.cutoff = 1 + static_cast<int>(rng() % 2);
        for (std::size_t q = 0; q < qubits; ++q) {
            Statement st;
            st.kind = Statement::Kind::DefQubit;
            st.qubit_name = "q" + std::to_string(q);
            st.mode_a = 2 * q;
            st.mode_b = 2 * q + 1;
            program.statements.push_back(st);
        }
        const std::size_t ops = 1 + rng() % 8;
        for (std::size_t o = 0; o < ops; ++o) {
            Statement st;
            switch (rng() % 5) {
                case 0:
                    st.kind = Statement::Kind::Source;
                    st.mode_a = rng() % program.mode_count;
                    break;
                case 1: {
                    st.kind = Statement::Kind::BeamSplitter;
                    st.mode_a = rng() % program.mode_count;
                    st.mode_b = (st.mode_a + 1 + rng() % (program.mode_count - 1)) %
                                program.mode_count;
                    const int form = static_cast<int>(rng() % 3);
                    if (form == 0) {
                        st.bs_form = Statement::BsForm::Hadamard;
                    } else if (form == 1) {
                        st.bs_form = Statement::BsForm::Prep;
                        const auto [a, b] = random_qubit(rng);
                        st.prep_alpha = a;
                        st.prep_beta = b;
                    } else {
                        st.bs_form = Statement::BsForm::Matrix;
                        const Mat2 u = random_unitary(rng);
                        st.matrix = {u.m00, u.m01, u.m10, u.m11};
                    }
                    break;
                }
                case 2: {
                    st.kind = Statement::Kind::Kerr;
                    st.mode_a = rng() % program.mode_count;
                    st.mode_b = (st.mode_a + 1 + rng() % (program.mode_count - 1)) %
                                program.mode_count;
                    st.angle = rng() % 2 == 0
                                   ? Angle::pi_multiple(static_cast<double>(rng() % 7) / 4.0)
                                   : Angle::radians(0.001 * static_cast<double>(rng() % 6283));
                    break;
                }
                case 3:
                    st.kind = Statement::Kind::MeasureX;
                    st.qubit_name = "q" + std::to_string(rng() % qubits);
                    break;
                default:
                    st.kind = Statement::Kind::MeasureZ;
                    st.qubit_name = "q" + std::to_string(rng() % qubits);
                    break;
            }
            program.statements.push_back(st);
        }
        CAPTURE(format_circuit(program));
        const CircuitProgram reparsed = parse_circuit(format_circuit(program));
        CHECK(reparsed == program);
    }
}

TEST_CASE("minimal programs execute") {
    const auto rows = execute_circuit(parse_circuit("modes 2\n"), BranchPolicy::enumerate_all());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].outcomes.empty());
    CHECK(rows[0].probability == doctest::Approx(1.0));
    CHECK_FALSE(rows[0].overlap.has_value());
    CHECK(rows[0].final_state.terms().size() == 1);
    CHECK(approx(rows[0].final_state.amplitude(basis("00")), 1.0));

    // Runtime errors carry the offending statement's line.
    try {
        execute_circuit(parse_circuit("modes 2\nsource 0\nsource 0\n"),
                        BranchPolicy::enumerate_all());
        FAIL_CHECK("expected a cutoff error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_SUITE_END();
