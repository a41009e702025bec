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

#include "kerrsim/mat2.hpp"

#include <cmath>

#include "kerrsim/errors.hpp"

namespace kerrsim {

Mat2 pauli_matrix(Pauli p) {
    const std::complex<double> i{0.0, 1.0};
    switch (p) {
        case Pauli::I: return {1.0, 0.0, 0.0, 1.0};
        case Pauli::X: return {0.0, 1.0, 1.0, 0.0};
        case Pauli::Z: return {1.0, 0.0, 0.0, -1.0};
        case Pauli::Y: return {0.0, -i, i, 0.0};
        case Pauli::XZ: return {0.0, -1.0, 1.0, 0.0};
    }
    throw Error("unknown Pauli");
}

const char* to_string(Pauli p) {
    switch (p) {
        case Pauli::I: return "I";
        case Pauli::X: return "X";
        case Pauli::Z: return "Z";
        case Pauli::Y: return "Y";
        case Pauli::XZ: return "XZ";
    }
    return "?";
}

Pauli pauli_from_string(const std::string& s) {
    if (s == "I") return Pauli::I;
    if (s == "X") return Pauli::X;
    if (s == "Z") return Pauli::Z;
    if (s == "Y") return Pauli::Y;
    if (s == "XZ") return Pauli::XZ;
    throw Error("not a Pauli label: '" + s + "'");
}

Mat2 x_quarter_rotation(int k) {
    const double theta = k * M_PI / 4.0;
    const std::complex<double> c{std::cos(theta), 0.0};
    const std::complex<double> is{0.0, std::sin(theta)};
    return {c, is, is, c};
}

}  // namespace kerrsim
