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

#include "kerrsim/optics.hpp"

#include <cmath>
#include <vector>

namespace kerrsim {

namespace {

void check_mode_pair(const PhotonicState& state, std::size_t a, std::size_t b) {
    if (a >= state.mode_count() || b >= state.mode_count()) {
        throw InvalidMode("mode index out of range for state with " +
                          std::to_string(state.mode_count()) + " modes");
    }
    if (a == b) {
        throw InvalidMode("two-mode element needs two distinct modes, got " + std::to_string(a) +
                          " twice");
    }
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

double binomial(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

std::complex<double> ipow(std::complex<double> z, int e) {
    std::complex<double> r{1.0, 0.0};
    for (int k = 0; k < e; ++k) {
        r *= z;
    }
    return r;
}

}  // namespace

double unitarity_defect(const Mat2& u) {
    const Mat2 p = u.dagger() * u;
    double defect = std::abs(p.m00 - 1.0);
    defect = std::max(defect, std::abs(p.m11 - 1.0));
    defect = std::max(defect, std::abs(p.m01));
    defect = std::max(defect, std::abs(p.m10));
    return defect;
}

bool is_unitary(const Mat2& u, double tol) { return unitarity_defect(u) <= tol; }

Mat2 hadamard_bs() {
    const double s = M_SQRT1_2;
    return {s, s, s, -s};
}

Mat2 qubit_prep(Complex alpha, Complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kNormTolerance) {
        throw NotNormalized("qubit_prep requires |alpha|^2 + |beta|^2 = 1");
    }
    // Second column sends the source photon |0,1> to alpha|1,0> + beta|0,1>;
    // the first column is the unitary completion.
    return {std::conj(beta), alpha, -std::conj(alpha), beta};
}

PhotonicState apply_kerr(const PhotonicState& state, const KerrSpec& spec) {
    check_mode_pair(state, spec.mode_a, spec.mode_b);
    PhotonicState result(state.mode_count(), state.cutoff());
    for (const auto& [basis, amp] : state.terms()) {
        const int sign = (1 - 2 * static_cast<int>(basis.occ[spec.mode_a])) *
                         (1 - 2 * static_cast<int>(basis.occ[spec.mode_b]));
        result.add_term(basis, amp * std::polar(1.0, spec.angle * sign));
    }
    return result;
}

PhotonicState apply_phase(const PhotonicState& state, std::size_t mode, double phase) {
    if (mode >= state.mode_count()) {
        throw InvalidMode("mode " + std::to_string(mode) + " out of range");
    }
    PhotonicState result(state.mode_count(), state.cutoff());
    for (const auto& [basis, amp] : state.terms()) {
        result.add_term(basis, amp * std::polar(1.0, phase * basis.occ[mode]));
    }
    return result;
}

PhotonicState apply_beamsplitter(const PhotonicState& state, const BeamSplitterSpec& spec) {
    check_mode_pair(state, spec.mode_a, spec.mode_b);
    if (!is_unitary(spec.matrix)) {
        throw NotUnitary("beam splitter matrix is not unitary within 1e-12");
    }
    const Mat2& u = spec.matrix;
    PhotonicState result(state.mode_count(), state.cutoff());
    for (const auto& [basis, amp] : state.terms()) {
        const int m = basis.occ[spec.mode_a];
        const int n = basis.occ[spec.mode_b];
        const int total = m + n;
        if (total == 0) {
            result.add_term(basis, amp);
            continue;
        }
        // (u00 a' + u10 b')^m (u01 a' + u11 b')^n expanded over output
        // occupations (j, total - j).
        const double in_fact = std::sqrt(factorial(m) * factorial(n));
        for (int j = 0; j <= total; ++j) {
            Complex coeff{0.0, 0.0};
            for (int r = std::max(0, j - n); r <= std::min(m, j); ++r) {
                const int s = j - r;
                coeff += binomial(m, r) * binomial(n, s) * ipow(u.m00, r) * ipow(u.m10, m - r) *
                         ipow(u.m01, s) * ipow(u.m11, n - s);
            }
            coeff *= std::sqrt(factorial(j) * factorial(total - j)) / in_fact;
            const Complex out_amp = amp * coeff;
            if (std::abs(out_amp) < kPruneThreshold) {
                continue;
            }
            if (j > state.cutoff() || total - j > state.cutoff()) {
                throw CutoffExceeded("beam splitter on modes (" + std::to_string(spec.mode_a) +
                                     ", " + std::to_string(spec.mode_b) +
                                     ") would exceed cutoff " + std::to_string(state.cutoff()));
            }
            FockBasis out = basis;
            out.occ[spec.mode_a] = static_cast<std::uint8_t>(j);
            out.occ[spec.mode_b] = static_cast<std::uint8_t>(total - j);
            result.add_term(out, out_amp);
        }
    }
    result.prune();
    return result;
}

}  // namespace kerrsim
