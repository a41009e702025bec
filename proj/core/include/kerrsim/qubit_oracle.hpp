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
 * Dense qubit-level simulator: Ising-type entangling evolutions (both the
 * sigma_z sigma_z form and the projector form), X-basis measurements,
 * reduced-state diagnostics, and reference implementations of the
 * teleportation and CNOT protocols. This layer is deliberately simple and
 * dense (capped at 12 qubits) so it can serve as the brute-force oracle the
 * optical simulator is checked against.
 *
 * Qubit 0 is the most significant bit of the amplitude index.
 */

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kerrsim/fock.hpp"
#include "kerrsim/mat2.hpp"

namespace kerrsim {

inline constexpr std::size_t kMaxOracleQubits = 12;

/// Dense complex vector over n logical qubits, kept at unit norm.
class QubitState {
  public:
    explicit QubitState(std::size_t qubit_count);
    QubitState(std::size_t qubit_count, std::vector<Complex> amplitudes);

    /// Computational basis state |index> (qubit 0 = most significant bit).
    static QubitState computational(std::size_t qubit_count, std::size_t index);

    /// Tensor product of per-qubit (alpha, beta) pairs.
    static QubitState product(const std::vector<std::pair<Complex, Complex>>& qubits);

    std::size_t qubit_count() const { return qubit_count_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_[index]; }

    int bit(std::size_t index, std::size_t qubit) const {
        return static_cast<int>((index >> (qubit_count_ - 1 - qubit)) & 1u);
    }

    double norm() const;
    void normalize();

    QubitState apply_single(std::size_t qubit, const Mat2& u) const;

  private:
    std::size_t qubit_count_;
    std::vector<Complex> amps_;
};

/// <a|b>.
Complex qubit_inner_product(const QubitState& a, const QubitState& b);

/// |<a|b>| >= 1 - tol.
bool equal_up_to_global_phase(const QubitState& a, const QubitState& b,
                              double tol = kGlobalPhaseTolerance);

/// Set of unordered qubit pairs carrying an Ising interaction.
struct CouplingGraph {
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// (0,1), (1,2), ..., (n-2, n-1).
    static CouplingGraph chain(std::size_t qubit_count);

    /// The four-qubit gate layout: edges (0,1), (1,2), (1,3).
    static CouplingGraph cnot_star();

    void validate(std::size_t qubit_count) const;
};

/// exp(-i theta sum_edges sigma_z sigma_z): each basis amplitude gains
/// exp(-i theta sum z_a z_a') with z = +1 for |0>, -1 for |1>.
QubitState ising_entangle(const QubitState& state, const CouplingGraph& graph, double theta);

/// Which computational basis state the projector (1+sigma_z)/2 selects.
enum class ProjectorOrientation { SelectsZero, SelectsOne };

/// exp(-i g sum_edges P_a P_a') with P the one-qubit projector chosen by
/// `orientation`: only basis states with both edge endpoints in the selected
/// value acquire the phase exp(-i g).
QubitState ising_entangle_rb_form(const QubitState& state, const CouplingGraph& graph, double g,
                                  ProjectorOrientation orientation = ProjectorOrientation::SelectsZero);

/// Single-qubit reduced density matrix (row-major 2x2) by partial trace.
std::array<Complex, 4> reduced_density(const QubitState& state, std::size_t qubit);

/// Tr(rho^2) of the single-qubit reduced state; 1/2 means maximal entanglement.
double reduced_purity(const QubitState& state, std::size_t qubit);

struct QubitBranch {
    int outcome;         ///< 0 for |+>, 1 for |->
    double probability;  ///< Born probability of this branch
    QubitState post;     ///< normalized; measured qubit left in |+> or |->
};

/// Projects qubit onto |+><+| / |-><-| and returns both branches. A branch
/// with probability ~0 carries an all-zero post state.
std::pair<QubitBranch, QubitBranch> measure_x_qubit(const QubitState& state, std::size_t qubit);

/// Contracts the given qubits against X-basis bras <s| and returns the state
/// of the remaining qubits (in their original order), normalized.
QubitState contract_x_outcomes(const QubitState& state,
                               const std::vector<std::pair<std::size_t, int>>& fixed);

/// Feed-forward correction: an optional quarter-turn x rotation following a
/// Pauli. Odd-length teleportation chains need only the Pauli part; even
/// lengths pick up a fixed exp(+-i pi/4 sigma_x) on top.
struct TeleportCorrection {
    Pauli pauli = Pauli::I;
    int x_quarter_turns = 0;  ///< -1, 0, or +1

    Mat2 matrix() const { return x_quarter_rotation(x_quarter_turns) * pauli_matrix(pauli); }
};

struct TeleportEntry {
    std::vector<int> outcomes;  ///< s_1 .. s_{n-1}
    TeleportCorrection correction;
    double fidelity;
    double probability;
};

/// Brute-force teleportation oracle: prepares (alpha, beta) on qubit 1 of an
/// n-qubit chain, entangles at theta = pi/4, enumerates every X-measurement
/// outcome tuple, and finds the correction maximizing
/// |<psi_in| C |psi_out>|. Entries are ordered by outcome tuple.
std::vector<TeleportEntry> teleport_reference(Complex alpha, Complex beta, std::size_t n_qubits);

/// The outcome -> correction table for an n-qubit chain, derived with a
/// generic probe state (corrections are input-independent).
std::vector<TeleportEntry> teleport_correction_table(std::size_t n_qubits);

/// The local operator that relates the measured t_out state to the ideal
/// CNOT output: 1/2 (1 + (-1)^s2 i) e^{-i pi/4} [[1,1],[-1,1]] X^s2.
Mat2 u_cnot(int s2);

using Mat4 = std::array<Complex, 16>;

/// The Raussendorf-Briegel byproduct on qubits (3,4) for comparison:
/// sigma_z^{s1+1} sigma_x^{s2} on qubit 3 tensor sigma_z^{s1} on qubit 4.
Mat4 u_sigma_34(int s1, int s2);

/// kron(a, b) with `a` on the more significant qubit.
Mat4 kron(const Mat2& a, const Mat2& b);

struct CnotCase {
    int i1, i4;
    int s1, s2;
    double probability;
    QubitState post_state;  ///< all four qubits, measured ones left in |+->
};

/// Runs the qubit-level CNOT protocol for input (i1, i4) and returns the four
/// post-measurement branches in (s1, s2) order.
std::vector<CnotCase> cnot_reference(int i1, int i4);

/// The published output state for one (input, outcome) combination.
QubitState cnot_table_state(int i1, int i4, int s1, int s2);

/// Corrected (t_out, control) reference for arbitrary single-qubit inputs:
/// runs the qubit protocol, applies u_cnot(s2)^{-1} to qubit 3, contracts the
/// measured qubits, and returns the remaining two-qubit state.
QubitState cnot_oracle_output(Complex t0, Complex t1, Complex c0, Complex c1, int s1, int s2);

}  // namespace kerrsim
