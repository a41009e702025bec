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

#include "kerrsim/qubit_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace kerrsim {

namespace {

constexpr double kZeroProbability = 1e-12;

void check_qubit_count(std::size_t n) {
    if (n == 0) {
        throw Error("qubit count must be at least 1");
    }
    if (n > kMaxOracleQubits) {
        throw Error("dense oracle is capped at " + std::to_string(kMaxOracleQubits) + " qubits");
    }
}

/// Unnormalized projection onto the X-basis outcome s of one qubit.
QubitState project_x_unnormalized(const QubitState& state, std::size_t qubit, int s) {
    const std::size_t n = state.qubit_count();
    const std::size_t stride = std::size_t{1} << (n - 1 - qubit);
    std::vector<Complex> amps(state.amplitudes());
    const double sign = s == 0 ? 1.0 : -1.0;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const Complex c = 0.5 * (amps[i0] + sign * amps[i1]);
            amps[i0] = c;
            amps[i1] = sign * c;
        }
    }
    return QubitState(n, std::move(amps));
}

double squared_norm(const QubitState& s) {
    double sum = 0.0;
    for (const auto& a : s.amplitudes()) {
        sum += std::norm(a);
    }
    return sum;
}

}  // namespace

QubitState::QubitState(std::size_t qubit_count)
    : qubit_count_(qubit_count), amps_(std::size_t{1} << qubit_count) {
    check_qubit_count(qubit_count);
    amps_[0] = Complex{1.0, 0.0};
}

QubitState::QubitState(std::size_t qubit_count, std::vector<Complex> amplitudes)
    : qubit_count_(qubit_count), amps_(std::move(amplitudes)) {
    check_qubit_count(qubit_count);
    if (amps_.size() != (std::size_t{1} << qubit_count)) {
        throw Error("amplitude vector size does not match qubit count");
    }
}

QubitState QubitState::computational(std::size_t qubit_count, std::size_t index) {
    check_qubit_count(qubit_count);
    std::vector<Complex> amps(std::size_t{1} << qubit_count);
    amps.at(index) = Complex{1.0, 0.0};
    return QubitState(qubit_count, std::move(amps));
}

QubitState QubitState::product(const std::vector<std::pair<Complex, Complex>>& qubits) {
    const std::size_t n = qubits.size();
    check_qubit_count(n);
    std::vector<Complex> amps(std::size_t{1} << n, Complex{1.0, 0.0});
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        for (std::size_t q = 0; q < n; ++q) {
            const bool one = (idx >> (n - 1 - q)) & 1u;
            amps[idx] *= one ? qubits[q].second : qubits[q].first;
        }
    }
    return QubitState(n, std::move(amps));
}

double QubitState::norm() const { return std::sqrt(squared_norm(*this)); }

void QubitState::normalize() {
    const double n = norm();
    if (n < kZeroProbability) {
        throw NotNormalized("cannot normalize a zero qubit state");
    }
    for (auto& a : amps_) {
        a /= n;
    }
}

QubitState QubitState::apply_single(std::size_t qubit, const Mat2& u) const {
    if (qubit >= qubit_count_) {
        throw Error("qubit index out of range");
    }
    const std::size_t stride = std::size_t{1} << (qubit_count_ - 1 - qubit);
    std::vector<Complex> amps(amps_);
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const Complex a0 = amps[i0];
            const Complex a1 = amps[i1];
            amps[i0] = u.m00 * a0 + u.m01 * a1;
            amps[i1] = u.m10 * a0 + u.m11 * a1;
        }
    }
    return QubitState(qubit_count_, std::move(amps));
}

Complex qubit_inner_product(const QubitState& a, const QubitState& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw MismatchedShape("qubit states differ in qubit count");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return sum;
}

bool equal_up_to_global_phase(const QubitState& a, const QubitState& b, double tol) {
    return std::abs(qubit_inner_product(a, b)) >= 1.0 - tol;
}

CouplingGraph CouplingGraph::chain(std::size_t qubit_count) {
    CouplingGraph g;
    for (std::size_t i = 0; i + 1 < qubit_count; ++i) {
        g.edges.emplace_back(i, i + 1);
    }
    return g;
}

CouplingGraph CouplingGraph::cnot_star() { return CouplingGraph{{{0, 1}, {1, 2}, {1, 3}}}; }

void CouplingGraph::validate(std::size_t qubit_count) const {
    for (const auto& [a, b] : edges) {
        if (a == b) {
            throw InvalidGraph("coupling graph edge with a self-loop at qubit " +
                               std::to_string(a));
        }
        if (a >= qubit_count || b >= qubit_count) {
            throw InvalidGraph("coupling graph edge out of range");
        }
    }
}

QubitState ising_entangle(const QubitState& state, const CouplingGraph& graph, double theta) {
    graph.validate(state.qubit_count());
    std::vector<Complex> amps(state.amplitudes());
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        int zz_sum = 0;
        for (const auto& [a, b] : graph.edges) {
            const int za = 1 - 2 * state.bit(idx, a);
            const int zb = 1 - 2 * state.bit(idx, b);
            zz_sum += za * zb;
        }
        amps[idx] *= std::polar(1.0, -theta * zz_sum);
    }
    return QubitState(state.qubit_count(), std::move(amps));
}

QubitState ising_entangle_rb_form(const QubitState& state, const CouplingGraph& graph, double g,
                                  ProjectorOrientation orientation) {
    graph.validate(state.qubit_count());
    const int selected = orientation == ProjectorOrientation::SelectsZero ? 0 : 1;
    std::vector<Complex> amps(state.amplitudes());
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        int count = 0;
        for (const auto& [a, b] : graph.edges) {
            if (state.bit(idx, a) == selected && state.bit(idx, b) == selected) {
                ++count;
            }
        }
        amps[idx] *= std::polar(1.0, -g * count);
    }
    return QubitState(state.qubit_count(), std::move(amps));
}

std::array<Complex, 4> reduced_density(const QubitState& state, std::size_t qubit) {
    const std::size_t n = state.qubit_count();
    if (n < 1 || qubit >= n) {
        throw Error("reduced_density: qubit index out of range");
    }
    const std::size_t stride = std::size_t{1} << (n - 1 - qubit);
    std::array<Complex, 4> rho{};
    for (std::size_t base = 0; base < state.dim(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const Complex a0 = state.amplitude(base + off);
            const Complex a1 = state.amplitude(base + off + stride);
            rho[0] += a0 * std::conj(a0);
            rho[1] += a0 * std::conj(a1);
            rho[2] += a1 * std::conj(a0);
            rho[3] += a1 * std::conj(a1);
        }
    }
    return rho;
}

double reduced_purity(const QubitState& state, std::size_t qubit) {
    const auto rho = reduced_density(state, qubit);
    const Complex trace_sq =
        rho[0] * rho[0] + rho[1] * rho[2] + rho[2] * rho[1] + rho[3] * rho[3];
    return trace_sq.real();
}

std::pair<QubitBranch, QubitBranch> measure_x_qubit(const QubitState& state, std::size_t qubit) {
    std::pair<QubitBranch, QubitBranch> result{{0, 0.0, state}, {1, 0.0, state}};
    auto fill = [&](QubitBranch& branch, int s) {
        QubitState projected = project_x_unnormalized(state, qubit, s);
        branch.outcome = s;
        branch.probability = squared_norm(projected);
        if (branch.probability > kZeroProbability) {
            projected.normalize();
            branch.post = std::move(projected);
        } else {
            branch.probability = 0.0;
            branch.post = QubitState(state.qubit_count(),
                                     std::vector<Complex>(state.dim(), Complex{0.0, 0.0}));
        }
    };
    fill(result.first, 0);
    fill(result.second, 1);
    return result;
}

QubitState contract_x_outcomes(const QubitState& state,
                               const std::vector<std::pair<std::size_t, int>>& fixed) {
    const std::size_t n = state.qubit_count();
    std::vector<int> outcome_of(n, -1);
    for (const auto& [q, s] : fixed) {
        if (q >= n) {
            throw Error("contract_x_outcomes: qubit index out of range");
        }
        outcome_of[q] = s;
    }
    std::vector<std::size_t> remaining;
    for (std::size_t q = 0; q < n; ++q) {
        if (outcome_of[q] < 0) {
            remaining.push_back(q);
        }
    }
    if (remaining.empty()) {
        throw Error("contract_x_outcomes: no qubits left");
    }
    const double inv_sqrt2 = M_SQRT1_2;
    std::vector<Complex> out(std::size_t{1} << remaining.size(), Complex{0.0, 0.0});
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        double coeff = 1.0;
        for (std::size_t q = 0; q < n; ++q) {
            if (outcome_of[q] >= 0) {
                coeff *= inv_sqrt2;
                if (outcome_of[q] == 1 && state.bit(idx, q) == 1) {
                    coeff = -coeff;
                }
            }
        }
        std::size_t out_idx = 0;
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            out_idx = (out_idx << 1) | static_cast<std::size_t>(state.bit(idx, remaining[k]));
        }
        out[out_idx] += coeff * state.amplitude(idx);
    }
    QubitState result(remaining.size(), std::move(out));
    result.normalize();
    return result;
}

std::vector<TeleportEntry> teleport_reference(Complex alpha, Complex beta, std::size_t n_qubits) {
    if (n_qubits < 2) {
        throw Error("teleportation needs at least 2 qubits");
    }
    check_qubit_count(n_qubits);
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kNormTolerance) {
        throw NotNormalized("teleport input must satisfy |alpha|^2 + |beta|^2 = 1");
    }

    const double inv_sqrt2 = M_SQRT1_2;
    std::vector<std::pair<Complex, Complex>> preps(n_qubits, {inv_sqrt2, inv_sqrt2});
    preps[0] = {alpha, beta};
    const QubitState entangled =
        ising_entangle(QubitState::product(preps), CouplingGraph::chain(n_qubits), M_PI / 4.0);

    // Candidate corrections: bare Paulis first, then the two quarter-turn
    // x rotations composed with a Pauli (needed for even chain lengths).
    struct Candidate {
        TeleportCorrection correction;
        Mat2 matrix;
    };
    std::vector<Candidate> candidates;
    for (int k : {0, -1, 1}) {
        for (Pauli p : {Pauli::I, Pauli::X, Pauli::Z, Pauli::XZ}) {
            TeleportCorrection c{p, k};
            candidates.push_back({c, c.matrix()});
        }
    }

    const std::size_t measured = n_qubits - 1;
    std::vector<TeleportEntry> entries;
    for (std::size_t tuple = 0; tuple < (std::size_t{1} << measured); ++tuple) {
        std::vector<int> outcomes(measured);
        for (std::size_t j = 0; j < measured; ++j) {
            outcomes[j] = static_cast<int>((tuple >> (measured - 1 - j)) & 1u);
        }

        // Unnormalized output amplitudes of the last qubit.
        std::array<Complex, 2> out{Complex{0.0, 0.0}, Complex{0.0, 0.0}};
        for (std::size_t idx = 0; idx < entangled.dim(); ++idx) {
            double coeff = 1.0;
            for (std::size_t j = 0; j < measured; ++j) {
                coeff *= inv_sqrt2;
                if (outcomes[j] == 1 && entangled.bit(idx, j) == 1) {
                    coeff = -coeff;
                }
            }
            out[static_cast<std::size_t>(entangled.bit(idx, n_qubits - 1))] +=
                coeff * entangled.amplitude(idx);
        }
        const double probability = std::norm(out[0]) + std::norm(out[1]);
        const double scale = 1.0 / std::sqrt(probability);
        out[0] *= scale;
        out[1] *= scale;

        TeleportEntry entry;
        entry.outcomes = outcomes;
        entry.probability = probability;
        entry.fidelity = -1.0;
        for (const auto& candidate : candidates) {
            const auto corrected = candidate.matrix.apply(out);
            const double fid =
                std::abs(std::conj(alpha) * corrected[0] + std::conj(beta) * corrected[1]);
            if (fid > entry.fidelity + 1e-12) {
                entry.fidelity = fid;
                entry.correction = candidate.correction;
            }
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<TeleportEntry> teleport_correction_table(std::size_t n_qubits) {
    // Generic probe: no Pauli ties at (0.6, 0.8i).
    return teleport_reference(Complex{0.6, 0.0}, Complex{0.0, 0.8}, n_qubits);
}

Mat2 u_cnot(int s2) {
    const Complex i{0.0, 1.0};
    const Complex prefactor =
        0.5 * (1.0 + (s2 == 0 ? i : -i)) * std::polar(1.0, -M_PI / 4.0);
    Mat2 m{1.0, 1.0, -1.0, 1.0};
    if (s2 == 1) {
        m = m * pauli_matrix(Pauli::X);
    }
    return prefactor * m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    const std::array<Complex, 4> av{a.m00, a.m01, a.m10, a.m11};
    const std::array<Complex, 4> bv{b.m00, b.m01, b.m10, b.m11};
    Mat4 out{};
    for (int ar = 0; ar < 2; ++ar) {
        for (int ac = 0; ac < 2; ++ac) {
            for (int br = 0; br < 2; ++br) {
                for (int bc = 0; bc < 2; ++bc) {
                    out[static_cast<std::size_t>((2 * ar + br) * 4 + (2 * ac + bc))] =
                        av[static_cast<std::size_t>(2 * ar + ac)] *
                        bv[static_cast<std::size_t>(2 * br + bc)];
                }
            }
        }
    }
    return out;
}

Mat4 u_sigma_34(int s1, int s2) {
    Mat2 on3 = Mat2::identity();
    for (int k = 0; k < s1 + 1; ++k) {
        on3 = on3 * pauli_matrix(Pauli::Z);
    }
    if (s2 == 1) {
        on3 = on3 * pauli_matrix(Pauli::X);
    }
    const Mat2 on4 = s1 == 1 ? pauli_matrix(Pauli::Z) : Mat2::identity();
    return kron(on3, on4);
}

namespace {

QubitState cnot_entangled_state(Complex t0, Complex t1, Complex c0, Complex c1) {
    const double inv_sqrt2 = M_SQRT1_2;
    const QubitState input = QubitState::product(
        {{t0, t1}, {inv_sqrt2, inv_sqrt2}, {inv_sqrt2, inv_sqrt2}, {c0, c1}});
    return ising_entangle(input, CouplingGraph::cnot_star(), M_PI / 4.0);
}

}  // namespace

std::vector<CnotCase> cnot_reference(int i1, int i4) {
    if ((i1 != 0 && i1 != 1) || (i4 != 0 && i4 != 1)) {
        throw Error("CNOT inputs must be 0 or 1");
    }
    const QubitState entangled = cnot_entangled_state(
        i1 == 0 ? 1.0 : 0.0, i1 == 0 ? 0.0 : 1.0, i4 == 0 ? 1.0 : 0.0, i4 == 0 ? 0.0 : 1.0);
    std::vector<CnotCase> cases;
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            QubitState projected =
                project_x_unnormalized(project_x_unnormalized(entangled, 0, s1), 1, s2);
            const double probability = squared_norm(projected);
            projected.normalize();
            cases.push_back({i1, i4, s1, s2, probability, std::move(projected)});
        }
    }
    return cases;
}

QubitState cnot_table_state(int i1, int i4, int s1, int s2) {
    // Leading signs of the sixteen published rows, inputs (i1,i4) by rows,
    // outcomes (s1,s2) by columns.
    static constexpr int kSign[4][4] = {
        {-1, +1, -1, +1},  // input (0,0)
        {+1, +1, +1, +1},  // input (0,1)
        {+1, +1, -1, -1},  // input (1,0)
        {+1, -1, -1, +1},  // input (1,1)
    };
    const int sign = kSign[2 * i1 + i4][2 * s1 + s2];
    const int q3_sign = ((i1 ^ i4) ^ s2) == 0 ? -1 : +1;
    const Complex i{0.0, 1.0};
    const Complex coeff = static_cast<double>(sign) * 0.5 * (1.0 + (s2 == 0 ? i : -i)) *
                          std::polar(1.0, -M_PI / 4.0);
    const double inv_sqrt2 = M_SQRT1_2;

    std::vector<Complex> amps(16, Complex{0.0, 0.0});
    for (std::size_t idx = 0; idx < 16; ++idx) {
        const int b1 = static_cast<int>((idx >> 3) & 1u);
        const int b2 = static_cast<int>((idx >> 2) & 1u);
        const int b3 = static_cast<int>((idx >> 1) & 1u);
        const int b4 = static_cast<int>(idx & 1u);
        if (b4 != i4) {
            continue;
        }
        double x_part = inv_sqrt2 * inv_sqrt2;
        if (s1 == 1 && b1 == 1) x_part = -x_part;
        if (s2 == 1 && b2 == 1) x_part = -x_part;
        const double q3_part = b3 == 0 ? 1.0 : static_cast<double>(q3_sign);
        amps[idx] = coeff * x_part * q3_part;
    }
    return QubitState(4, std::move(amps));
}

QubitState cnot_oracle_output(Complex t0, Complex t1, Complex c0, Complex c1, int s1, int s2) {
    QubitState projected = project_x_unnormalized(
        project_x_unnormalized(cnot_entangled_state(t0, t1, c0, c1), 0, s1), 1, s2);
    projected.normalize();
    const QubitState corrected = projected.apply_single(2, u_cnot(s2).dagger());
    return contract_x_outcomes(corrected, {{0, s1}, {1, s2}});
}

}  // namespace kerrsim
