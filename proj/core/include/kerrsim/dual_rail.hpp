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
 * Logical layer over the Fock engine: dual-rail qubits with
 * |0>_L = |1>_a |0>_b and |1>_L = |0>_a |1>_b, state preparation through
 * beam splitters, X/Z measurements with deterministic branch enumeration,
 * and optically implemented Pauli / single-qubit corrections.
 *
 * Measurements return both branches; nothing is sampled at this layer, so
 * protocols can visit every outcome combination reproducibly. An X
 * measurement rotates the pair with the 50-50 splitter, projects on which
 * mode carries the photon, and rotates back, leaving the measured pair in
 * |+>_L or |->_L exactly like the qubit-level description.
 */

#pragma once

#include <utility>
#include <vector>

#include "kerrsim/fock.hpp"
#include "kerrsim/optics.hpp"
#include "kerrsim/qubit_oracle.hpp"

namespace kerrsim {

/// Maps logical qubit index to its ordered (mode_a, mode_b) pair.
struct DualRailRegister {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    /// Qubit i on modes (2i, 2i+1).
    static DualRailRegister contiguous(std::size_t qubit_count);

    std::size_t qubit_count() const { return pairs.size(); }
    std::size_t mode_a(std::size_t qubit) const { return pairs.at(qubit).first; }
    std::size_t mode_b(std::size_t qubit) const { return pairs.at(qubit).second; }

    /// All mode indices distinct and below mode_count.
    void validate(std::size_t mode_count) const;
};

enum class MeasurementBasis { X, Z };

/// One branch of a projective measurement. X-basis outcomes follow the
/// convention s = 0 <-> |+>, s = 1 <-> |->. A zero-probability branch
/// carries an empty post state.
struct MeasurementRecord {
    std::size_t qubit;
    MeasurementBasis basis;
    int outcome;
    double probability;
    PhotonicState post_state;
};

/// Creates the photon in mode_b and applies the qubit_prep splitter, turning
/// a vacuum pair into alpha|0>_L + beta|1>_L. The pair must be empty on every
/// term (NotVacuum otherwise).
PhotonicState prepare_qubit(const PhotonicState& state, const DualRailRegister& reg,
                            std::size_t qubit, Complex alpha, Complex beta);

/// Reads a dual-rail state into the dense qubit representation. Every term
/// must carry exactly one photon per pair and none outside the register
/// (InvalidDualRailSupport otherwise).
QubitState decode_qubit(const PhotonicState& state, const DualRailRegister& reg);

/// X-basis measurement by 50-50 rotation, which-mode projection, and
/// un-rotation; returns the (s=0, s=1) branches.
std::pair<MeasurementRecord, MeasurementRecord> measure_x(const PhotonicState& state,
                                                          const DualRailRegister& reg,
                                                          std::size_t qubit);

/// Computational-basis measurement: which of the two modes holds the photon.
std::pair<MeasurementRecord, MeasurementRecord> measure_z(const PhotonicState& state,
                                                          const DualRailRegister& reg,
                                                          std::size_t qubit);

/// Optical Pauli: X is a mode swap on the pair, Z a pi phase on mode_b,
/// Y and XZ their compositions.
PhotonicState apply_pauli(const PhotonicState& state, const DualRailRegister& reg,
                          std::size_t qubit, Pauli p);

/// Arbitrary single-qubit unitary on the pair via the beam-splitter path
/// (such rotations are plain linear optics). Throws NotUnitary.
PhotonicState apply_logical_unitary(const PhotonicState& state, const DualRailRegister& reg,
                                    std::size_t qubit, const Mat2& u);

}  // namespace kerrsim
