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

#include <cmath>

#include "kerrsim/dual_rail.hpp"
#include "test_util.hpp"

using namespace kerrsim;
using namespace kerrsim::test;

TEST_SUITE_BEGIN("dual_rail");

namespace {

PhotonicState prepare_all(const DualRailRegister& reg,
                          const std::vector<std::pair<Complex, Complex>>& qubits, int cutoff = 1) {
    PhotonicState s = make_vacuum(2 * qubits.size(), cutoff);
    for (std::size_t q = 0; q < qubits.size(); ++q) {
        s = prepare_qubit(s, reg, q, qubits[q].first, qubits[q].second);
    }
    return s;
}

}  // namespace

TEST_CASE("state preparation") {
    const DualRailRegister reg = DualRailRegister::contiguous(1);

    const PhotonicState zero = prepare_all(reg, {{1.0, 0.0}});
    CHECK(approx(zero.amplitude(basis("10")), 1.0));

    const PhotonicState plus = prepare_all(reg, {{M_SQRT1_2, M_SQRT1_2}});
    CHECK(approx(plus.amplitude(basis("10")), M_SQRT1_2));
    CHECK(approx(plus.amplitude(basis("01")), M_SQRT1_2));

    const Complex alpha{0.6, 0.0};
    const Complex beta{0.0, 0.8};
    const PhotonicState generic = prepare_all(reg, {{alpha, beta}});
    CHECK(generic.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const QubitState decoded = decode_qubit(generic, reg);
    CHECK(approx(decoded.amplitude(0), alpha));
    CHECK(approx(decoded.amplitude(1), beta));

    CHECK_THROWS_AS(prepare_qubit(generic, reg, 0, 1.0, 0.0), NotVacuum);
    CHECK_THROWS_AS(prepare_all(reg, {{0.9, 0.9}}), NotNormalized);
}

TEST_CASE("decoding to the qubit picture") {
    const DualRailRegister reg = DualRailRegister::contiguous(2);
    const PhotonicState s = prepare_all(reg, {{M_SQRT1_2, M_SQRT1_2}, {1.0, 0.0}});
    const QubitState q = decode_qubit(s, reg);
    CHECK(approx(q.amplitude(0), M_SQRT1_2));
    CHECK(approx(q.amplitude(1), 0.0));
    CHECK(approx(q.amplitude(2), M_SQRT1_2));
    CHECK(approx(q.amplitude(3), 0.0));

    // A pair with zero photons is not a dual-rail state.
    PhotonicState broken(4, 1);
    broken.add_term(basis("1000"), 1.0);
    CHECK_THROWS_AS(decode_qubit(broken, reg), InvalidDualRailSupport);

    // Photons outside the register are rejected as well.
    const DualRailRegister one = DualRailRegister::contiguous(1);
    PhotonicState stray(4, 1);
    stray.add_term(basis("1010"), 1.0);
    CHECK_THROWS_AS(decode_qubit(stray, one), InvalidDualRailSupport);
}

TEST_CASE("entangled chain decodes to the oracle state") {
    const Complex alpha{0.6, 0.0};
    const Complex beta{0.0, 0.8};
    const DualRailRegister reg = DualRailRegister::contiguous(3);
    PhotonicState s = prepare_all(
        reg, {{alpha, beta}, {M_SQRT1_2, M_SQRT1_2}, {M_SQRT1_2, M_SQRT1_2}});
    s = apply_kerr(s, {0, 3, M_PI / 4.0});
    s = apply_kerr(s, {2, 5, M_PI / 4.0});

    const QubitState expected = ising_entangle(
        QubitState::product({{alpha, beta}, {M_SQRT1_2, M_SQRT1_2}, {M_SQRT1_2, M_SQRT1_2}}),
        CouplingGraph::chain(3), M_PI / 4.0);
    const QubitState decoded = decode_qubit(s, reg);
    for (std::size_t idx = 0; idx < 8; ++idx) {
        CHECK(approx(decoded.amplitude(idx), expected.amplitude(idx)));
    }

    // Post-measurement stages agree with the oracle branches as well.
    const auto [r0, r1] = measure_x(s, reg, 0);
    const auto [b0, b1] = measure_x_qubit(expected, 0);
    CHECK(r0.probability == doctest::Approx(b0.probability).epsilon(1e-12));
    CHECK(r1.probability == doctest::Approx(b1.probability).epsilon(1e-12));
    for (std::size_t idx = 0; idx < 8; ++idx) {
        CHECK(approx(decode_qubit(r0.post_state, reg).amplitude(idx), b0.post.amplitude(idx)));
        CHECK(approx(decode_qubit(r1.post_state, reg).amplitude(idx), b1.post.amplitude(idx)));
    }
}

TEST_CASE("x measurement") {
    const DualRailRegister reg = DualRailRegister::contiguous(1);

    auto [p0, p1] = measure_x(prepare_all(reg, {{M_SQRT1_2, M_SQRT1_2}}), reg, 0);
    CHECK(p0.probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p1.probability == 0.0);
    CHECK(p1.post_state.empty());

    auto [z0, z1] = measure_x(prepare_all(reg, {{1.0, 0.0}}), reg, 0);
    CHECK(z0.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(z1.probability == doctest::Approx(0.5).epsilon(1e-12));

    // Post states sit back in |+->_L and are orthogonal.
    CHECK(approx(z0.post_state.amplitude(basis("10")), M_SQRT1_2));
    CHECK(approx(z0.post_state.amplitude(basis("01")), M_SQRT1_2));
    CHECK(std::abs(inner_product(z0.post_state, z1.post_state)) <= 1e-12);
}

TEST_CASE("chain measurements leave the output a Pauli away from the input") {
    const Complex alpha{0.6, 0.0};
    const Complex beta{0.0, 0.8};
    const DualRailRegister reg = DualRailRegister::contiguous(3);
    PhotonicState s = prepare_all(
        reg, {{alpha, beta}, {M_SQRT1_2, M_SQRT1_2}, {M_SQRT1_2, M_SQRT1_2}});
    s = apply_kerr(s, {0, 3, M_PI / 4.0});
    s = apply_kerr(s, {2, 5, M_PI / 4.0});

    const QubitState input(1, {alpha, beta});
    auto first = measure_x(s, reg, 0);
    for (const MeasurementRecord* m1 : {&first.first, &first.second}) {
        auto second = measure_x(m1->post_state, reg, 1);
        for (const MeasurementRecord* m2 : {&second.first, &second.second}) {
            CHECK(m1->probability * m2->probability == doctest::Approx(0.25).epsilon(1e-12));
            const QubitState decoded = decode_qubit(m2->post_state, reg);
            const QubitState out = contract_x_outcomes(
                decoded, {{0, m1->outcome}, {1, m2->outcome}});
            bool fixed_by_some_pauli = false;
            for (Pauli p : {Pauli::I, Pauli::X, Pauli::Z, Pauli::XZ}) {
                const QubitState corrected = out.apply_single(0, pauli_matrix(p));
                fixed_by_some_pauli =
                    fixed_by_some_pauli || equal_up_to_global_phase(corrected, input, 1e-10);
            }
            CHECK(fixed_by_some_pauli);
        }
    }
}

TEST_CASE("z measurement") {
    const DualRailRegister reg = DualRailRegister::contiguous(1);

    auto [o0, o1] = measure_z(prepare_all(reg, {{0.0, 1.0}}), reg, 0);
    CHECK(o0.probability == 0.0);
    CHECK(o1.probability == doctest::Approx(1.0).epsilon(1e-12));

    auto [p0, p1] = measure_z(prepare_all(reg, {{M_SQRT1_2, M_SQRT1_2}}), reg, 0);
    CHECK(p0.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p1.probability == doctest::Approx(0.5).epsilon(1e-12));

    const Complex alpha{0.6, 0.0};
    const Complex beta{0.0, 0.8};
    auto [b0, b1] = measure_z(prepare_all(reg, {{alpha, beta}}), reg, 0);
    CHECK(b0.probability == doctest::Approx(std::norm(alpha)).epsilon(1e-12));
    CHECK(b1.probability == doctest::Approx(std::norm(beta)).epsilon(1e-12));
    CHECK(b0.probability + b1.probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("optical paulis") {
    const DualRailRegister reg = DualRailRegister::contiguous(1);
    const Complex alpha{0.6, 0.0};
    const Complex beta{0.0, 0.8};

    const PhotonicState zero = prepare_all(reg, {{1.0, 0.0}});
    CHECK(approx(apply_pauli(zero, reg, 0, Pauli::X).amplitude(basis("01")), 1.0));

    const PhotonicState plus = prepare_all(reg, {{M_SQRT1_2, M_SQRT1_2}});
    const PhotonicState flipped = apply_pauli(plus, reg, 0, Pauli::Z);
    CHECK(approx(flipped.amplitude(basis("10")), M_SQRT1_2));
    CHECK(approx(flipped.amplitude(basis("01")), -M_SQRT1_2));

    const PhotonicState generic = prepare_all(reg, {{alpha, beta}});
    const QubitState xz = decode_qubit(apply_pauli(generic, reg, 0, Pauli::XZ), reg);
    QubitState expected(1, {-beta, alpha});
    CHECK(equal_up_to_global_phase(xz, expected));

    const QubitState y = decode_qubit(apply_pauli(zero, reg, 0, Pauli::Y), reg);
    CHECK(approx(y.amplitude(1), Complex{0.0, 1.0}));
}

TEST_CASE("logical unitaries ride the beam-splitter path") {
    const DualRailRegister reg = DualRailRegister::contiguous(1);
    const PhotonicState zero = prepare_all(reg, {{1.0, 0.0}});

    const PhotonicState same = apply_logical_unitary(zero, reg, 0, Mat2::identity());
    CHECK(approx(same.amplitude(basis("10")), 1.0));

    const PhotonicState plus = apply_logical_unitary(zero, reg, 0, hadamard_bs());
    CHECK(approx(plus.amplitude(basis("10")), M_SQRT1_2));
    CHECK(approx(plus.amplitude(basis("01")), M_SQRT1_2));

    // The u_cnot(0) inverse turns (|0>_L - |1>_L)/sqrt(2) into |0>_L exactly.
    const PhotonicState minus = prepare_all(reg, {{M_SQRT1_2, -M_SQRT1_2}});
    const PhotonicState corrected =
        apply_logical_unitary(minus, reg, 0, u_cnot(0).dagger());
    CHECK(std::abs(corrected.amplitude(basis("10"))) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(apply_logical_unitary(zero, reg, 0, Mat2{1.0, 1.0, 1.0, 1.0}), NotUnitary);
}

TEST_CASE("round trip: prepared register decodes to the product state") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 1 + rng() % 4;
        std::vector<std::pair<Complex, Complex>> qubits;
        for (std::size_t q = 0; q < n; ++q) {
            qubits.push_back(random_qubit(rng));
        }
        const DualRailRegister reg = DualRailRegister::contiguous(n);
        const QubitState decoded = decode_qubit(prepare_all(reg, qubits), reg);
        const QubitState expected = QubitState::product(qubits);
        for (std::size_t idx = 0; idx < decoded.dim(); ++idx) {
            CHECK(approx(decoded.amplitude(idx), expected.amplitude(idx)));
        }
    }
}

TEST_CASE("operations conserve one photon per pair") {
    std::mt19937_64 rng(59);
    const DualRailRegister reg = DualRailRegister::contiguous(2);
    PhotonicState s = prepare_all(reg, {random_qubit(rng), random_qubit(rng)});
    s = apply_kerr(s, {0, 3, 0.9});
    s = apply_pauli(s, reg, 0, Pauli::XZ);
    s = apply_logical_unitary(s, reg, 1, random_unitary(rng));
    auto [m0, m1] = measure_x(s, reg, 0);
    for (const PhotonicState* state : {&s, &m0.post_state, &m1.post_state}) {
        for (const auto& [key, amp] : state->terms()) {
            for (std::size_t q = 0; q < 2; ++q) {
                CHECK(key.occ[reg.mode_a(q)] + key.occ[reg.mode_b(q)] == 1);
            }
        }
    }
}

TEST_CASE("nonuniform registers work the same") {
    // Pairs need not be contiguous; use (3,0) and (1,2) on four modes.
    DualRailRegister reg;
    reg.pairs = {{3, 0}, {1, 2}};
    PhotonicState s = make_vacuum(4, 1);
    s = prepare_qubit(s, reg, 0, 0.0, 1.0);   // |1>_L: photon in mode 0
    s = prepare_qubit(s, reg, 1, 1.0, 0.0);   // |0>_L: photon in mode 1
    const QubitState q = decode_qubit(s, reg);
    CHECK(std::abs(q.amplitude(2)) == doctest::Approx(1.0).epsilon(1e-12));

    DualRailRegister clash;
    clash.pairs = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(clash.validate(4), InvalidMode);
}

TEST_SUITE_END();
