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

/**
 * @file
 * The .qc circuit description language: one statement per line,
 * whitespace-separated lowercase keywords, `#` comments. Programs declare a
 * mode count and optional photon cutoff, define dual-rail qubits, and list
 * sources, beam splitters, Kerr gates, measurements, and feed-forward
 * corrections in execution order. See docs/format.md for the grammar.
 *
 * Angles accept rational-of-pi literals (`1pi/4`), decimal multiples of pi
 * (`0.25pi`), and plain radians; pi-scaled values are kept as exact
 * multipliers so parse(format(p)) preserves them bit for bit.
 */

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "kerrsim/protocols.hpp"

namespace kerrsim {

/// A gate angle, remembered as written: either a multiple of pi or raw radians.
struct Angle {
    enum class Kind { PiMultiple, Radians };
    Kind kind = Kind::Radians;
    double value = 0.0;  ///< pi multiplier or radians, depending on kind

    static Angle pi_multiple(double m) { return {Kind::PiMultiple, m}; }
    static Angle radians(double r) { return {Kind::Radians, r}; }

    double as_radians() const { return kind == Kind::PiMultiple ? value * M_PI : value; }

    friend bool operator==(const Angle&, const Angle&) = default;
};

struct Statement {
    enum class Kind { Source, BeamSplitter, Kerr, MeasureX, MeasureZ, Correct, DefQubit };
    enum class BsForm { Hadamard, Prep, Matrix };

    Kind kind = Kind::Source;
    std::size_t line = 0;  ///< 1-based source line; ignored by equality

    std::string qubit_name;              // DefQubit, MeasureX/Z, Correct
    std::size_t mode_a = 0, mode_b = 0;  // DefQubit, BeamSplitter, Kerr; Source uses mode_a
    BsForm bs_form = BsForm::Hadamard;
    Complex prep_alpha{0.0}, prep_beta{0.0};
    std::array<Complex, 4> matrix{};  // row-major, Matrix form only
    Angle angle{};                    // Kerr
    CorrectionKind table = CorrectionKind::None;  // Correct

    friend bool operator==(const Statement& a, const Statement& b) {
        return a.kind == b.kind && a.qubit_name == b.qubit_name && a.mode_a == b.mode_a &&
               a.mode_b == b.mode_b && a.bs_form == b.bs_form && a.prep_alpha == b.prep_alpha &&
               a.prep_beta == b.prep_beta && a.matrix == b.matrix && a.angle == b.angle &&
               a.table == b.table;
    }
};

struct CircuitProgram {
    std::size_t mode_count = 0;
    int cutoff = 1;
    std::vector<Statement> statements;

    friend bool operator==(const CircuitProgram& a, const CircuitProgram& b) {
        return a.mode_count == b.mode_count && a.cutoff == b.cutoff &&
               a.statements == b.statements;
    }
};

/// Parses and validates a program. Throws ParseError on the first syntax
/// error and ValidationError on the first semantic violation, each carrying
/// a 1-based line and column.
CircuitProgram parse_circuit(std::string_view text);

/// Deterministic canonical rendering; parse_circuit(format_circuit(p)) is
/// structurally equal to p.
std::string format_circuit(const CircuitProgram& program);

/// Lowers a validated program onto the protocol engine.
OpticalProtocol compile_circuit(const CircuitProgram& program);

/// compile + run in one step.
std::vector<ProtocolResult> execute_circuit(const CircuitProgram& program,
                                            const BranchPolicy& policy,
                                            double tolerance = kGlobalPhaseTolerance);

/// Complex literal syntax shared with the CLI: `0.6`, `0.8i`, `0.6+0.8i`,
/// `0.6-0.8i`, `i`, `-i`. Throws Error on malformed input.
Complex parse_complex_literal(const std::string& token);

/// Canonical rendering, shortest round-trip digits: `0.6`, `0.8i`, `0.6+0.8i`.
std::string format_complex_literal(Complex z);

}  // namespace kerrsim
