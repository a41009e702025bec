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

#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "kerrsim/dual_rail.hpp"
#include "kerrsim/fock.hpp"
#include "kerrsim/qubit_oracle.hpp"

namespace kerrsim::test {

inline FockBasis basis(const std::string& digits) {
    std::vector<std::uint8_t> occ;
    for (char c : digits) {
        occ.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return FockBasis(std::move(occ));
}

/// Single normalized basis ket like ket("101010").
inline PhotonicState ket(const std::string& digits, int cutoff = 1) {
    PhotonicState s(digits.size(), cutoff);
    s.add_term(basis(digits), Complex{1.0, 0.0});
    return s;
}

inline bool approx(Complex a, Complex b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

/// Encodes a dense qubit state into the dual-rail Fock representation; the
/// inverse of decode_qubit, used to build optical expectations in tests.
inline PhotonicState dual_rail_encode(const QubitState& q, const DualRailRegister& reg,
                                      std::size_t mode_count, int cutoff = 1) {
    PhotonicState s(mode_count, cutoff);
    for (std::size_t idx = 0; idx < q.dim(); ++idx) {
        if (std::abs(q.amplitude(idx)) < 1e-300) {
            continue;
        }
        std::vector<std::uint8_t> occ(mode_count, 0);
        for (std::size_t qu = 0; qu < q.qubit_count(); ++qu) {
            if (q.bit(idx, qu) == 0) {
                occ[reg.mode_a(qu)] = 1;
            } else {
                occ[reg.mode_b(qu)] = 1;
            }
        }
        s.add_term(FockBasis(std::move(occ)), q.amplitude(idx));
    }
    return s;
}

/// Random normalized amplitude pair.
inline std::pair<Complex, Complex> random_qubit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double a = uni(rng);
    const double phi = 2.0 * M_PI * uni(rng);
    const double psi = 2.0 * M_PI * uni(rng);
    return {std::polar(std::sqrt(a), psi), std::polar(std::sqrt(1.0 - a), phi)};
}

/// Haar-ish random 2x2 unitary.
inline Mat2 random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double theta = std::asin(std::sqrt(uni(rng)));
    const double phi = 2.0 * M_PI * uni(rng);
    const double chi = 2.0 * M_PI * uni(rng);
    const double global = 2.0 * M_PI * uni(rng);
    const Complex g = std::polar(1.0, global);
    return {g * std::polar(std::cos(theta), phi), g * std::polar(std::sin(theta), chi),
            g * -std::polar(std::sin(theta), -chi), g * std::polar(std::cos(theta), -phi)};
}

/// Random normalized sparse state with at most `max_terms` single-photon-safe
/// terms (occupations bounded by the cutoff).
inline PhotonicState random_state(std::mt19937_64& rng, std::size_t modes, int cutoff,
                                  std::size_t max_terms) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    PhotonicState s(modes, cutoff);
    const std::size_t terms = 1 + rng() % max_terms;
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::uint8_t> occ(modes, 0);
        for (auto& n : occ) {
            n = static_cast<std::uint8_t>(rng() % (cutoff + 1));
        }
        s.add_term(FockBasis(std::move(occ)),
                   Complex{uni(rng) * 2.0 - 1.0, uni(rng) * 2.0 - 1.0});
    }
    s.prune();
    if (s.empty()) {
        return ket(std::string(modes, '0'), cutoff);
    }
    s.normalize();
    return s;
}

}  // namespace kerrsim::test
