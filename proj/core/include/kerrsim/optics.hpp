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
 * Unitary optical elements on PhotonicState: beam splitters, single-mode
 * phase shifts, and the mutual-Kerr cross-phase operator chi.
 *
 * The cross-phase operator is diagonal in the Fock basis,
 *     chi |n_a, n_b> = exp(i * angle * (1 - 2 n_a)(1 - 2 n_b)) |n_a, n_b>,
 * so it is applied exactly, term by term, rather than by exponentiating a
 * matrix. The single-mode phase factors that accompany the cross term in the
 * underlying Hamiltonian are already bundled into that product form.
 */

#pragma once

#include "kerrsim/fock.hpp"
#include "kerrsim/mat2.hpp"

namespace kerrsim {

/// A beam splitter is described by the 2x2 unitary acting on the
/// single-photon amplitude pair (mode_a, mode_b); column convention, so
/// column 0 is the image of a photon in mode_a. For occupations above one
/// photon the standard homogeneous-polynomial bosonic lift applies.
struct BeamSplitterSpec {
    std::size_t mode_a;
    std::size_t mode_b;
    Mat2 matrix;
};

/// Mutual-Kerr cross-phase gate between two modes with a net accumulated
/// angle (pi/4 gives the maximally entangling gate).
struct KerrSpec {
    std::size_t mode_a;
    std::size_t mode_b;
    double angle;
};

/// 50-50 splitter [[1,1],[1,-1]]/sqrt(2); self-inverse. Used for |+>/|->
/// basis changes, i.e. the rotation in front of an X measurement.
Mat2 hadamard_bs();

/// The splitter that turns a fresh photon in mode_b into the dual-rail state
/// alpha|0>_L + beta|1>_L, i.e. maps |0,1> -> alpha|1,0> + beta|0,1>.
/// Requires |alpha|^2 + |beta|^2 = 1.
Mat2 qubit_prep(Complex alpha, Complex beta);

/// Phase exp(i * angle * (1-2 n_a)(1-2 n_b)) per term; exact and norm-preserving.
PhotonicState apply_kerr(const PhotonicState& state, const KerrSpec& spec);

/// Two-mode bosonic transformation by spec.matrix. Throws CutoffExceeded when
/// an output occupation would pass the cutoff, NotUnitary for a bad matrix.
PhotonicState apply_beamsplitter(const PhotonicState& state, const BeamSplitterSpec& spec);

/// Single-mode phase shift: each term gains exp(i * phase * n_mode).
PhotonicState apply_phase(const PhotonicState& state, std::size_t mode, double phase);

}  // namespace kerrsim
