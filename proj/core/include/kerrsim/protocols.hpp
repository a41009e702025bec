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
 * The two named experiments on the optical simulator: n-qubit chain
 * teleportation and the four-qubit CNOT, together with the generic
 * element-sequence runner both are built on. Measurement branches are
 * explored deterministically (every outcome tuple, enumerate_all) or by a
 * seeded sampler; feed-forward corrections come from the qubit oracle.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kerrsim/dual_rail.hpp"

namespace kerrsim {

struct BranchPolicy {
    enum class Kind { EnumerateAll, Sample };
    Kind kind = Kind::EnumerateAll;
    std::uint64_t seed = 0;

    static BranchPolicy enumerate_all() { return {Kind::EnumerateAll, 0}; }
    static BranchPolicy sample(std::uint64_t seed) { return {Kind::Sample, seed}; }
};

enum class CorrectionKind { None, Teleport, Cnot };

/// One step of a compiled optical protocol.
struct Element {
    enum class Kind { Source, BeamSplitter, Kerr, MeasureX, MeasureZ, Correct };
    Kind kind;
    std::size_t mode = 0;                              // Source
    BeamSplitterSpec bs{0, 0, Mat2::identity()};       // BeamSplitter
    KerrSpec kerr{0, 0, 0.0};                          // Kerr
    std::size_t qubit = 0;                             // Measure*, Correct
    CorrectionKind correction = CorrectionKind::None;  // Correct
    std::size_t source_line = 0;                       // script line, 0 for built-ins
};

/// A fully specified optical experiment: register, element order, and the
/// logical input description used for fidelity targets and reports.
struct OpticalProtocol {
    std::size_t mode_count = 2;
    int cutoff = 1;
    DualRailRegister reg;
    std::vector<Element> elements;

    CorrectionKind correction = CorrectionKind::None;
    std::size_t correction_target = 0;  ///< qubit receiving the feed-forward
    std::size_t input_qubit = 0;        ///< teleport: carries psi_in
    std::size_t control_qubit = 0;      ///< cnot: the control site
    /// Recorded (alpha, beta) per qubit; {0,0} when never prepared.
    std::vector<std::pair<Complex, Complex>> preps;
    /// Canonical JSON fragment describing the logical input ("null" if none).
    std::string input_json = "null";
};

struct ProtocolResult {
    std::vector<int> outcomes;             ///< in measurement time order
    double probability = 1.0;
    std::vector<Complex> logical_output;   ///< corrected output amplitudes
    std::optional<double> overlap;         ///< vs the protocol's target state
    std::optional<bool> pass;
    PhotonicState pre_correction{2, 1};    ///< optical state after measurements
    PhotonicState final_state{2, 1};       ///< optical state after correction
};

/// Runs the element sequence under the branch policy. Enumeration visits
/// every branch with probability above 1e-12 and returns rows sorted by
/// outcome tuple; sampling returns the one realized branch.
std::vector<ProtocolResult> run_protocol(const OpticalProtocol& proto, const BranchPolicy& policy,
                                         double tolerance = kGlobalPhaseTolerance);

/// Chain teleportation of (alpha, beta) across n >= 2 dual-rail qubits
/// (Kerr gates at pi/4 between neighbours, X measurements on qubits
/// 1..n-1, oracle-derived correction on qubit n). A custom measurement
/// order may be supplied; outcomes are keyed by qubit for the correction
/// lookup, so order cannot change the corrected outputs.
OpticalProtocol teleport_protocol(Complex alpha, Complex beta, std::size_t n_qubits,
                                  std::vector<std::size_t> measurement_order = {});

/// The four-qubit CNOT layout: t_in on qubit 1, |+> on qubits 2 and 3,
/// control on qubit 4, Kerr gates chi1, chi2, chi3, X measurements on
/// qubits 1 and 2, and the u_cnot(s2)^{-1} correction on qubit 3.
OpticalProtocol cnot_protocol(int i1, int i4);

/// Same layout with arbitrary single-qubit inputs on t_in and control.
OpticalProtocol cnot_protocol_general(Complex t0, Complex t1, Complex c0, Complex c1);

std::vector<ProtocolResult> run_teleportation(Complex alpha, Complex beta, std::size_t n_qubits,
                                              const BranchPolicy& policy,
                                              double tolerance = kGlobalPhaseTolerance);

std::vector<ProtocolResult> run_cnot(int i1, int i4, const BranchPolicy& policy,
                                     double tolerance = kGlobalPhaseTolerance);

/// One row of the published-table verification report.
struct TableCheckRow {
    int i1, i4;
    int s1, s2;
    double probability;
    double overlap;
    bool pass;
};

/// Simulates the CNOT layout for all four computational inputs and compares
/// every post-measurement branch against the corresponding published output
/// state up to global phase. `kerr_angle_delta` perturbs the first Kerr gate
/// (used to confirm the check actually has teeth).
std::vector<TableCheckRow> verify_tables(double kerr_angle_delta = 0.0,
                                         double tolerance = kGlobalPhaseTolerance);

/// Aggregate result of the seeded random-state teleportation fidelity sweep.
struct TeleportSuiteResult {
    std::size_t n_qubits;
    std::size_t states;            ///< number of random (alpha, beta) inputs
    std::size_t branches;          ///< total branches checked
    double min_fidelity;
    bool corrections_pauli_only;   ///< no quarter-turn x rotations needed
    bool pass;                     ///< min_fidelity >= 1 - tolerance
};

/// Runs full-enumeration teleportation for `states` seeded random inputs on
/// an n-qubit chain and reports the worst corrected fidelity. Random inputs
/// are drawn with a mt19937_64: alpha = sqrt(u1), beta = sqrt(1-u1) e^{2 pi i u2}.
TeleportSuiteResult run_teleport_fidelity_suite(std::size_t n_qubits, std::size_t states,
                                                std::uint64_t seed,
                                                double tolerance = kGlobalPhaseTolerance);

/// JSON report: array of {input, outcome, probability, overlap, pass, state}
/// rows with stable field order and 12-significant-digit amplitudes.
std::string report_to_json(const OpticalProtocol& proto,
                           const std::vector<ProtocolResult>& results);

std::string table_report_to_json(const std::vector<TableCheckRow>& rows);

/// Canonical input fragments shared by the protocol builders and the script
/// compiler, so both emission paths produce identical reports.
std::string teleport_input_json(Complex alpha, Complex beta, std::size_t n_qubits);
std::string cnot_input_json(const std::pair<Complex, Complex>& t_in,
                            const std::pair<Complex, Complex>& control);

}  // namespace kerrsim
