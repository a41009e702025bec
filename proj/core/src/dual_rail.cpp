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

#include "kerrsim/dual_rail.hpp"

#include <cmath>
#include <set>

namespace kerrsim {

namespace {

constexpr double kZeroProbability = 1e-12;

void check_qubit(const DualRailRegister& reg, const PhotonicState& state, std::size_t qubit) {
    if (qubit >= reg.qubit_count()) {
        throw InvalidMode("logical qubit index " + std::to_string(qubit) + " out of range");
    }
    reg.validate(state.mode_count());
}

/// Exactly one photon shared by the pair, on every term.
void check_support(const PhotonicState& state, const DualRailRegister& reg, std::size_t qubit) {
    const std::size_t a = reg.mode_a(qubit);
    const std::size_t b = reg.mode_b(qubit);
    for (const auto& [basis, amp] : state.terms()) {
        if (basis.occ[a] + basis.occ[b] != 1) {
            throw InvalidDualRailSupport("qubit " + std::to_string(qubit) + " holds " +
                                         std::to_string(basis.occ[a] + basis.occ[b]) +
                                         " photons on some term");
        }
    }
}

}  // namespace

DualRailRegister DualRailRegister::contiguous(std::size_t qubit_count) {
    DualRailRegister reg;
    for (std::size_t q = 0; q < qubit_count; ++q) {
        reg.pairs.emplace_back(2 * q, 2 * q + 1);
    }
    return reg;
}

void DualRailRegister::validate(std::size_t mode_count) const {
    std::set<std::size_t> seen;
    for (const auto& [a, b] : pairs) {
        if (a >= mode_count || b >= mode_count) {
            throw InvalidMode("register pair mode out of range");
        }
        if (!seen.insert(a).second || !seen.insert(b).second) {
            throw InvalidMode("register pairs must use distinct modes");
        }
    }
}

PhotonicState prepare_qubit(const PhotonicState& state, const DualRailRegister& reg,
                            std::size_t qubit, Complex alpha, Complex beta) {
    check_qubit(reg, state, qubit);
    const std::size_t a = reg.mode_a(qubit);
    const std::size_t b = reg.mode_b(qubit);
    for (const auto& [basis, amp] : state.terms()) {
        if (basis.occ[a] != 0 || basis.occ[b] != 0) {
            throw NotVacuum("qubit " + std::to_string(qubit) + " modes are not in vacuum");
        }
    }
    const PhotonicState sourced = create_photon(state, b);
    return apply_beamsplitter(sourced, {a, b, qubit_prep(alpha, beta)});
}

QubitState decode_qubit(const PhotonicState& state, const DualRailRegister& reg) {
    reg.validate(state.mode_count());
    const std::size_t n = reg.qubit_count();
    if (n == 0) {
        throw InvalidMode("cannot decode an empty register");
    }
    std::vector<bool> in_register(state.mode_count(), false);
    for (const auto& [a, b] : reg.pairs) {
        in_register[a] = in_register[b] = true;
    }

    std::vector<Complex> amps(std::size_t{1} << n, Complex{0.0, 0.0});
    for (const auto& [basis, amp] : state.terms()) {
        for (std::size_t m = 0; m < state.mode_count(); ++m) {
            if (!in_register[m] && basis.occ[m] != 0) {
                throw InvalidDualRailSupport("photon in mode " + std::to_string(m) +
                                             " outside the register");
            }
        }
        std::size_t index = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const int na = basis.occ[reg.mode_a(q)];
            const int nb = basis.occ[reg.mode_b(q)];
            if (na + nb != 1 || na > 1 || nb > 1) {
                throw InvalidDualRailSupport("qubit " + std::to_string(q) +
                                             " has invalid dual-rail support");
            }
            index = (index << 1) | static_cast<std::size_t>(nb);
        }
        amps[index] += amp;
    }
    return QubitState(n, std::move(amps));
}

namespace {

std::pair<MeasurementRecord, MeasurementRecord> project_which_mode(const PhotonicState& rotated,
                                                                   const DualRailRegister& reg,
                                                                   std::size_t qubit,
                                                                   MeasurementBasis basis,
                                                                   bool unrotate) {
    const std::size_t a = reg.mode_a(qubit);
    const std::size_t b = reg.mode_b(qubit);
    PhotonicState in_a(rotated.mode_count(), rotated.cutoff());
    PhotonicState in_b(rotated.mode_count(), rotated.cutoff());
    for (const auto& [key, amp] : rotated.terms()) {
        (key.occ[a] == 1 ? in_a : in_b).add_term(key, amp);
    }

    auto finish = [&](PhotonicState&& projected, int outcome) {
        double p = 0.0;
        for (const auto& [key, amp] : projected.terms()) {
            p += std::norm(amp);
        }
        if (p <= kZeroProbability) {
            return MeasurementRecord{qubit, basis, outcome, 0.0,
                                     PhotonicState(rotated.mode_count(), rotated.cutoff())};
        }
        projected.normalize();
        if (unrotate) {
            projected = apply_beamsplitter(projected, {a, b, hadamard_bs()});
        }
        projected.prune();
        return MeasurementRecord{qubit, basis, outcome, p, std::move(projected)};
    };

    return {finish(std::move(in_a), 0), finish(std::move(in_b), 1)};
}

}  // namespace

std::pair<MeasurementRecord, MeasurementRecord> measure_x(const PhotonicState& state,
                                                          const DualRailRegister& reg,
                                                          std::size_t qubit) {
    check_qubit(reg, state, qubit);
    check_support(state, reg, qubit);
    const PhotonicState rotated =
        apply_beamsplitter(state, {reg.mode_a(qubit), reg.mode_b(qubit), hadamard_bs()});
    return project_which_mode(rotated, reg, qubit, MeasurementBasis::X, /*unrotate=*/true);
}

std::pair<MeasurementRecord, MeasurementRecord> measure_z(const PhotonicState& state,
                                                          const DualRailRegister& reg,
                                                          std::size_t qubit) {
    check_qubit(reg, state, qubit);
    check_support(state, reg, qubit);
    return project_which_mode(state, reg, qubit, MeasurementBasis::Z, /*unrotate=*/false);
}

PhotonicState apply_pauli(const PhotonicState& state, const DualRailRegister& reg,
                          std::size_t qubit, Pauli p) {
    check_qubit(reg, state, qubit);
    const std::size_t a = reg.mode_a(qubit);
    const std::size_t b = reg.mode_b(qubit);

    auto swap_modes = [&](const PhotonicState& s) {
        PhotonicState out(s.mode_count(), s.cutoff());
        for (const auto& [key, amp] : s.terms()) {
            FockBasis swapped = key;
            std::swap(swapped.occ[a], swapped.occ[b]);
            out.add_term(swapped, amp);
        }
        return out;
    };
    auto scale = [&](const PhotonicState& s, Complex factor) {
        PhotonicState out(s.mode_count(), s.cutoff());
        for (const auto& [key, amp] : s.terms()) {
            out.add_term(key, amp * factor);
        }
        return out;
    };

    switch (p) {
        case Pauli::I:
            return state;
        case Pauli::X:
            return swap_modes(state);
        case Pauli::Z:
            return apply_phase(state, b, M_PI);
        case Pauli::XZ:
            return swap_modes(apply_phase(state, b, M_PI));
        case Pauli::Y:
            return scale(swap_modes(apply_phase(state, b, M_PI)), Complex{0.0, 1.0});
    }
    throw Error("unknown Pauli");
}

PhotonicState apply_logical_unitary(const PhotonicState& state, const DualRailRegister& reg,
                                    std::size_t qubit, const Mat2& u) {
    check_qubit(reg, state, qubit);
    if (!is_unitary(u)) {
        throw NotUnitary("logical correction matrix is not unitary within 1e-12");
    }
    return apply_beamsplitter(state, {reg.mode_a(qubit), reg.mode_b(qubit), u});
}

}  // namespace kerrsim
