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

#include <array>
#include <complex>
#include <cstddef>
#include <string>

namespace kerrsim {

/// Dense complex 2x2 matrix in row-major order, acting on column vectors.
struct Mat2 {
    std::complex<double> m00{0.0}, m01{0.0}, m10{0.0}, m11{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 dagger() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }

    friend Mat2 operator*(std::complex<double> s, const Mat2& m) {
        return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
    }

    std::array<std::complex<double>, 2> apply(const std::array<std::complex<double>, 2>& v) const {
        return {m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1]};
    }
};

/// Largest absolute deviation of U^dag U from the identity.
double unitarity_defect(const Mat2& u);

bool is_unitary(const Mat2& u, double tol = 1e-12);

/// Pauli corrections used by the feed-forward layer. XZ means the operator
/// product sigma_x * sigma_z (apply Z first, then X).
enum class Pauli { I, X, Z, Y, XZ };

Mat2 pauli_matrix(Pauli p);

const char* to_string(Pauli p);

/// Parses "I", "X", "Z", "Y", "XZ". Throws Error on anything else.
Pauli pauli_from_string(const std::string& s);

/// exp(i * k * pi/4 * sigma_x): the quarter-turn x rotations that appear as
/// the outcome-independent part of even-length teleportation corrections.
Mat2 x_quarter_rotation(int k);

}  // namespace kerrsim
