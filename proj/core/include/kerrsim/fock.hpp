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
 * Sparse state vector over bosonic Fock space: a multimode photonic state is
 * a map from occupation-number vectors to complex amplitudes. All protocol
 * states in this project have at most one photon per mode and at most 2^n
 * terms for n dual-rail qubits, so a sparse map beats a dense 2^m array and
 * makes the per-mode photon cutoff trivial to enforce.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kerrsim/errors.hpp"

namespace kerrsim {

using Complex = std::complex<double>;

/// |<a|b>| >= 1 - tol counts as "the same state up to a global phase".
inline constexpr double kGlobalPhaseTolerance = 1e-10;

/// Amplitudes below this magnitude are dropped after each operator
/// application; two orders of magnitude under the comparison tolerance.
inline constexpr double kPruneThreshold = 1e-14;

/// Norm drift allowed after a normalized construction or a unitary.
inline constexpr double kNormTolerance = 1e-12;

/// Photon occupation numbers of the modes, mode 0 first. Ordering is
/// lexicographic with mode 0 most significant, which fixes the iteration
/// and serialization order of PhotonicState terms.
struct FockBasis {
    std::vector<std::uint8_t> occ;

    FockBasis() = default;
    explicit FockBasis(std::vector<std::uint8_t> occupations) : occ(std::move(occupations)) {}

    std::size_t mode_count() const { return occ.size(); }
    unsigned total_photons() const;

    auto operator<=>(const FockBasis&) const = default;
};

/**
 * Sparse superposition of Fock basis states for a fixed number of modes and a
 * fixed per-mode photon cutoff.
 *
 * States are immutable values once built: every operator in the optics layer
 * returns a new state. Exceeding the cutoff is always a hard error, never a
 * silent truncation.
 */
class PhotonicState {
  public:
    using TermMap = std::map<FockBasis, Complex>;

    PhotonicState(std::size_t mode_count, int cutoff = 1);

    std::size_t mode_count() const { return mode_count_; }
    int cutoff() const { return cutoff_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Amplitude of one basis vector (0 if absent).
    Complex amplitude(const FockBasis& basis) const;

    /// Inserts or accumulates one term. Throws MismatchedShape / CutoffExceeded
    /// when the key does not fit this state's shape.
    void add_term(const FockBasis& basis, Complex amplitude);

    double norm() const;

    /// Scales to unit norm. Throws NotNormalized on an (effectively) zero state.
    void normalize();

    /// Drops terms with |amplitude| < kPruneThreshold.
    void prune();

    friend bool operator==(const PhotonicState&, const PhotonicState&) = default;

  private:
    std::size_t mode_count_;
    int cutoff_;
    TermMap terms_;
};

/// |0...0> on `mode_count` modes. Rejects mode_count = 0 and cutoff < 1.
PhotonicState make_vacuum(std::size_t mode_count, int cutoff = 1);

/// Applies the creation operator a^dag to one mode (bosonic sqrt(n+1) factors)
/// and renormalizes. Throws CutoffExceeded if any term would pass the cutoff.
PhotonicState create_photon(const PhotonicState& state, std::size_t mode);

/// <s1|s2>. Both states must share mode count and cutoff.
Complex inner_product(const PhotonicState& s1, const PhotonicState& s2);

/// True iff |<s1|s2>| >= 1 - tol; both states must be normalized.
bool equal_up_to_global_phase(const PhotonicState& s1, const PhotonicState& s2,
                              double tol = kGlobalPhaseTolerance);

/// `{"modes": m, "cutoff": c, "terms": [{"occ": [...], "re": x, "im": y}, ...]}`
/// with terms in lexicographic key order and 12-significant-digit amplitudes.
std::string state_to_json(const PhotonicState& state);

/// Inverse of state_to_json. Throws IoError on malformed input.
PhotonicState state_from_json(const std::string& text);

}  // namespace kerrsim
