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

#include "kerrsim/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "kerrsim/jsonfmt.hpp"

namespace kerrsim {

namespace {

constexpr double kZeroProbability = 1e-12;

double next_uniform(std::mt19937_64& rng) {
    // 53 high bits -> [0, 1); fixed mapping, stable across platforms.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct WalkContext {
    const OpticalProtocol& proto;
    double tolerance;
    bool sampling;
    std::mt19937_64 rng;
    std::vector<TeleportEntry> teleport_table;  // empty unless CorrectionKind::Teleport
    std::vector<ProtocolResult> results;
};

Error with_line(const Element& el, const Error& e) {
    return Error("line " + std::to_string(el.source_line) + ": " + e.what());
}

PhotonicState apply_correction(const PhotonicState& state, WalkContext& ctx,
                               const std::vector<std::pair<std::size_t, int>>& x_outcomes,
                               const Element& el) {
    const OpticalProtocol& proto = ctx.proto;
    if (el.correction == CorrectionKind::Teleport) {
        // Correction table is keyed by qubit index, so a permuted
        // measurement order selects the same entry.
        auto sorted = x_outcomes;
        std::sort(sorted.begin(), sorted.end());
        if ((std::size_t{1} << sorted.size()) != ctx.teleport_table.size()) {
            throw Error("teleport correction needs one X outcome per measured qubit");
        }
        std::size_t index = 0;
        for (const auto& [qubit, s] : sorted) {
            index = (index << 1) | static_cast<std::size_t>(s);
        }
        const TeleportCorrection& corr = ctx.teleport_table.at(index).correction;
        PhotonicState corrected = apply_pauli(state, proto.reg, el.qubit, corr.pauli);
        if (corr.x_quarter_turns != 0) {
            corrected = apply_logical_unitary(corrected, proto.reg, el.qubit,
                                              x_quarter_rotation(corr.x_quarter_turns));
        }
        return corrected;
    }
    if (el.correction == CorrectionKind::Cnot) {
        int s2 = -1;
        for (const auto& [qubit, s] : x_outcomes) {
            if (qubit == 1) {
                s2 = s;
            }
        }
        if (s2 < 0) {
            throw Error("cnot correction needs an X measurement on qubit 2");
        }
        return apply_logical_unitary(state, proto.reg, el.qubit, u_cnot(s2).dagger());
    }
    return state;
}

void finalize_branch(WalkContext& ctx, PhotonicState state,
                     const std::optional<PhotonicState>& pre_correction,
                     std::vector<int> outcomes,
                     const std::vector<std::pair<std::size_t, int>>& x_outcomes, double prob) {
    const OpticalProtocol& proto = ctx.proto;
    ProtocolResult row;
    row.outcomes = std::move(outcomes);
    row.probability = prob;
    row.pre_correction = pre_correction.value_or(state);
    row.final_state = state;

    if (proto.correction == CorrectionKind::Teleport) {
        const QubitState decoded = decode_qubit(state, proto.reg);
        const QubitState out = contract_x_outcomes(decoded, x_outcomes);
        row.logical_output = out.amplitudes();
        const auto& [alpha, beta] = proto.preps[proto.input_qubit];
        row.overlap = std::abs(std::conj(alpha) * out.amplitude(0) +
                               std::conj(beta) * out.amplitude(1));
    } else if (proto.correction == CorrectionKind::Cnot) {
        const QubitState decoded = decode_qubit(state, proto.reg);
        const QubitState out = contract_x_outcomes(decoded, x_outcomes);
        row.logical_output = out.amplitudes();
        int s1 = 0, s2 = 0;
        for (const auto& [qubit, s] : x_outcomes) {
            if (qubit == 0) s1 = s;
            if (qubit == 1) s2 = s;
        }
        const auto& [t0, t1] = proto.preps[proto.input_qubit];
        const auto& [c0, c1] = proto.preps[proto.control_qubit];
        const QubitState reference = cnot_oracle_output(t0, t1, c0, c1, s1, s2);
        row.overlap = std::abs(qubit_inner_product(reference, out));
    }
    if (row.overlap.has_value()) {
        row.pass = *row.overlap >= 1.0 - ctx.tolerance;
    }
    ctx.results.push_back(std::move(row));
}

void walk(PhotonicState state, std::size_t element_index, std::vector<int> outcomes,
          std::vector<std::pair<std::size_t, int>> x_outcomes, double prob,
          std::optional<PhotonicState> pre_correction, WalkContext& ctx) {
    const auto& elements = ctx.proto.elements;
    for (std::size_t i = element_index; i < elements.size(); ++i) {
        const Element& el = elements[i];
        try {
            switch (el.kind) {
                case Element::Kind::Source:
                    state = create_photon(state, el.mode);
                    break;
                case Element::Kind::BeamSplitter:
                    state = apply_beamsplitter(state, el.bs);
                    break;
                case Element::Kind::Kerr:
                    state = apply_kerr(state, el.kerr);
                    break;
                case Element::Kind::Correct:
                    pre_correction = state;
                    state = apply_correction(state, ctx, x_outcomes, el);
                    break;
                case Element::Kind::MeasureX:
                case Element::Kind::MeasureZ: {
                    const bool is_x = el.kind == Element::Kind::MeasureX;
                    auto [r0, r1] = is_x ? measure_x(state, ctx.proto.reg, el.qubit)
                                         : measure_z(state, ctx.proto.reg, el.qubit);
                    if (ctx.sampling) {
                        const double u = next_uniform(ctx.rng);
                        const MeasurementRecord& pick =
                            (r0.probability > kZeroProbability && u < r0.probability) ? r0 : r1;
                        state = pick.post_state;
                        outcomes.push_back(pick.outcome);
                        if (is_x) {
                            x_outcomes.emplace_back(el.qubit, pick.outcome);
                        }
                        prob *= pick.probability;
                        break;
                    }
                    for (const MeasurementRecord* rec : {&r0, &r1}) {
                        if (rec->probability <= kZeroProbability) {
                            continue;
                        }
                        auto next_outcomes = outcomes;
                        next_outcomes.push_back(rec->outcome);
                        auto next_x = x_outcomes;
                        if (is_x) {
                            next_x.emplace_back(el.qubit, rec->outcome);
                        }
                        walk(rec->post_state, i + 1, std::move(next_outcomes), std::move(next_x),
                             prob * rec->probability, pre_correction, ctx);
                    }
                    return;
                }
            }
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& e) {
            if (el.source_line > 0) {
                throw with_line(el, e);
            }
            throw;
        }
    }
    finalize_branch(ctx, std::move(state), pre_correction, std::move(outcomes), x_outcomes, prob);
}

}  // namespace

std::vector<ProtocolResult> run_protocol(const OpticalProtocol& proto, const BranchPolicy& policy,
                                         double tolerance) {
    proto.reg.validate(proto.mode_count);
    WalkContext ctx{proto, tolerance, policy.kind == BranchPolicy::Kind::Sample,
                    std::mt19937_64(policy.seed), {}, {}};
    if (proto.correction == CorrectionKind::Teleport) {
        ctx.teleport_table = teleport_correction_table(proto.reg.qubit_count());
    }
    walk(make_vacuum(proto.mode_count, proto.cutoff), 0, {}, {}, 1.0, std::nullopt, ctx);
    std::sort(ctx.results.begin(), ctx.results.end(),
              [](const ProtocolResult& a, const ProtocolResult& b) {
                  return a.outcomes < b.outcomes;
              });
    return ctx.results;
}

OpticalProtocol teleport_protocol(Complex alpha, Complex beta, std::size_t n_qubits,
                                  std::vector<std::size_t> measurement_order) {
    if (n_qubits < 2) {
        throw Error("teleportation needs at least 2 qubits");
    }
    if (n_qubits > kMaxOracleQubits) {
        throw Error("teleportation chain capped at " + std::to_string(kMaxOracleQubits) +
                    " qubits");
    }
    OpticalProtocol proto;
    proto.mode_count = 2 * n_qubits;
    proto.cutoff = 1;
    proto.reg = DualRailRegister::contiguous(n_qubits);
    proto.correction = CorrectionKind::Teleport;
    proto.correction_target = n_qubits - 1;
    proto.input_qubit = 0;

    const double inv_sqrt2 = M_SQRT1_2;
    proto.preps.assign(n_qubits, {inv_sqrt2, inv_sqrt2});
    proto.preps[0] = {alpha, beta};
    for (std::size_t q = 0; q < n_qubits; ++q) {
        Element src{Element::Kind::Source};
        src.mode = proto.reg.mode_b(q);
        proto.elements.push_back(src);
        Element bs{Element::Kind::BeamSplitter};
        bs.bs = {proto.reg.mode_a(q), proto.reg.mode_b(q),
                 qubit_prep(proto.preps[q].first, proto.preps[q].second)};
        proto.elements.push_back(bs);
    }
    for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
        Element kerr{Element::Kind::Kerr};
        kerr.kerr = {proto.reg.mode_a(q), proto.reg.mode_b(q + 1), M_PI / 4.0};
        proto.elements.push_back(kerr);
    }
    if (measurement_order.empty()) {
        for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
            measurement_order.push_back(q);
        }
    }
    std::vector<bool> seen(n_qubits, false);
    for (std::size_t q : measurement_order) {
        if (q + 1 >= n_qubits || seen[q]) {
            throw Error("measurement order must be a permutation of the first n-1 qubits");
        }
        seen[q] = true;
        Element m{Element::Kind::MeasureX};
        m.qubit = q;
        proto.elements.push_back(m);
    }
    if (measurement_order.size() + 1 != n_qubits) {
        throw Error("measurement order must cover all qubits but the last");
    }
    Element corr{Element::Kind::Correct};
    corr.qubit = proto.correction_target;
    corr.correction = CorrectionKind::Teleport;
    proto.elements.push_back(corr);

    proto.input_json = teleport_input_json(alpha, beta, n_qubits);
    return proto;
}

OpticalProtocol cnot_protocol_general(Complex t0, Complex t1, Complex c0, Complex c1) {
    OpticalProtocol proto;
    proto.mode_count = 8;
    proto.cutoff = 1;
    proto.reg = DualRailRegister::contiguous(4);
    proto.correction = CorrectionKind::Cnot;
    proto.correction_target = 2;
    proto.input_qubit = 0;
    proto.control_qubit = 3;

    const double inv_sqrt2 = M_SQRT1_2;
    proto.preps = {{t0, t1}, {inv_sqrt2, inv_sqrt2}, {inv_sqrt2, inv_sqrt2}, {c0, c1}};
    for (std::size_t q = 0; q < 4; ++q) {
        Element src{Element::Kind::Source};
        src.mode = proto.reg.mode_b(q);
        proto.elements.push_back(src);
        Element bs{Element::Kind::BeamSplitter};
        bs.bs = {proto.reg.mode_a(q), proto.reg.mode_b(q),
                 qubit_prep(proto.preps[q].first, proto.preps[q].second)};
        proto.elements.push_back(bs);
    }
    // chi1 couples (a, d), chi2 (c, f), chi3 (c, h): graph edges 1-2, 2-3, 2-4.
    const std::array<std::pair<std::size_t, std::size_t>, 3> kerr_modes{
        std::pair<std::size_t, std::size_t>{proto.reg.mode_a(0), proto.reg.mode_b(1)},
        {proto.reg.mode_a(1), proto.reg.mode_b(2)},
        {proto.reg.mode_a(1), proto.reg.mode_b(3)}};
    for (const auto& [a, b] : kerr_modes) {
        Element kerr{Element::Kind::Kerr};
        kerr.kerr = {a, b, M_PI / 4.0};
        proto.elements.push_back(kerr);
    }
    for (std::size_t q : {std::size_t{0}, std::size_t{1}}) {
        Element m{Element::Kind::MeasureX};
        m.qubit = q;
        proto.elements.push_back(m);
    }
    Element corr{Element::Kind::Correct};
    corr.qubit = proto.correction_target;
    corr.correction = CorrectionKind::Cnot;
    proto.elements.push_back(corr);

    proto.input_json = cnot_input_json(proto.preps[0], proto.preps[3]);
    return proto;
}

OpticalProtocol cnot_protocol(int i1, int i4) {
    if ((i1 != 0 && i1 != 1) || (i4 != 0 && i4 != 1)) {
        throw Error("CNOT inputs must be 0 or 1");
    }
    return cnot_protocol_general(i1 == 0 ? 1.0 : 0.0, i1 == 0 ? 0.0 : 1.0,
                                 i4 == 0 ? 1.0 : 0.0, i4 == 0 ? 0.0 : 1.0);
}

std::vector<ProtocolResult> run_teleportation(Complex alpha, Complex beta, std::size_t n_qubits,
                                              const BranchPolicy& policy, double tolerance) {
    return run_protocol(teleport_protocol(alpha, beta, n_qubits), policy, tolerance);
}

std::vector<ProtocolResult> run_cnot(int i1, int i4, const BranchPolicy& policy,
                                     double tolerance) {
    return run_protocol(cnot_protocol(i1, i4), policy, tolerance);
}

std::vector<TableCheckRow> verify_tables(double kerr_angle_delta, double tolerance) {
    std::vector<TableCheckRow> rows;
    for (int i1 = 0; i1 < 2; ++i1) {
        for (int i4 = 0; i4 < 2; ++i4) {
            OpticalProtocol proto = cnot_protocol(i1, i4);
            if (kerr_angle_delta != 0.0) {
                for (auto& el : proto.elements) {
                    if (el.kind == Element::Kind::Kerr) {
                        el.kerr.angle += kerr_angle_delta;
                        break;
                    }
                }
            }
            const auto results = run_protocol(proto, BranchPolicy::enumerate_all(), tolerance);
            for (const auto& res : results) {
                const int s1 = res.outcomes.at(0);
                const int s2 = res.outcomes.at(1);
                const QubitState decoded = decode_qubit(res.pre_correction, proto.reg);
                const QubitState expected = cnot_table_state(i1, i4, s1, s2);
                const double overlap = std::abs(qubit_inner_product(expected, decoded));
                rows.push_back(
                    {i1, i4, s1, s2, res.probability, overlap, overlap >= 1.0 - tolerance});
            }
        }
    }
    return rows;
}

TeleportSuiteResult run_teleport_fidelity_suite(std::size_t n_qubits, std::size_t states,
                                                std::uint64_t seed, double tolerance) {
    std::mt19937_64 rng(seed);
    TeleportSuiteResult suite{n_qubits, states, 0, 1.0, true, false};
    for (const auto& entry : teleport_correction_table(n_qubits)) {
        if (entry.correction.x_quarter_turns != 0) {
            suite.corrections_pauli_only = false;
        }
    }
    for (std::size_t k = 0; k < states; ++k) {
        const double u1 = next_uniform(rng);
        const double u2 = next_uniform(rng);
        const Complex alpha{std::sqrt(u1), 0.0};
        const Complex beta = std::polar(std::sqrt(1.0 - u1), 2.0 * M_PI * u2);
        for (const auto& res :
             run_teleportation(alpha, beta, n_qubits, BranchPolicy::enumerate_all(), tolerance)) {
            ++suite.branches;
            suite.min_fidelity = std::min(suite.min_fidelity, res.overlap.value_or(0.0));
        }
    }
    suite.pass = suite.min_fidelity >= 1.0 - tolerance;
    return suite;
}

std::string teleport_input_json(Complex alpha, Complex beta, std::size_t n_qubits) {
    JsonWriter w;
    w.begin_object();
    w.key("protocol");
    w.value_string("teleport");
    w.key("n");
    w.value_int(static_cast<long long>(n_qubits));
    w.key("alpha");
    w.value_raw(complex_to_json(alpha));
    w.key("beta");
    w.value_raw(complex_to_json(beta));
    w.end_object();
    return w.str();
}

std::string cnot_input_json(const std::pair<Complex, Complex>& t_in,
                            const std::pair<Complex, Complex>& control) {
    auto computational = [](const std::pair<Complex, Complex>& q) -> int {
        if (q.first == Complex{1.0, 0.0} && q.second == Complex{0.0, 0.0}) return 0;
        if (q.first == Complex{0.0, 0.0} && q.second == Complex{1.0, 0.0}) return 1;
        return -1;
    };
    JsonWriter w;
    w.begin_object();
    w.key("protocol");
    w.value_string("cnot");
    const int i1 = computational(t_in);
    const int i4 = computational(control);
    if (i1 >= 0 && i4 >= 0) {
        w.key("i1");
        w.value_int(i1);
        w.key("i4");
        w.value_int(i4);
    } else {
        w.key("t_in");
        w.value_raw("[" + complex_to_json(t_in.first) + "," + complex_to_json(t_in.second) + "]");
        w.key("control");
        w.value_raw("[" + complex_to_json(control.first) + "," + complex_to_json(control.second) +
                    "]");
    }
    w.end_object();
    return w.str();
}

std::string report_to_json(const OpticalProtocol& proto,
                           const std::vector<ProtocolResult>& results) {
    JsonWriter w;
    w.begin_array();
    for (const auto& res : results) {
        w.begin_object();
        w.key("input");
        w.value_raw(proto.input_json);
        w.key("outcome");
        w.begin_array();
        for (int s : res.outcomes) {
            w.value_int(s);
        }
        w.end_array();
        w.key("probability");
        w.value_number(res.probability);
        w.key("overlap");
        if (res.overlap.has_value()) {
            w.value_number(*res.overlap);
        } else {
            w.value_null();
        }
        w.key("pass");
        if (res.pass.has_value()) {
            w.value_bool(*res.pass);
        } else {
            w.value_null();
        }
        w.key("state");
        if (!res.logical_output.empty()) {
            w.begin_array();
            for (const auto& amp : res.logical_output) {
                w.value_raw(complex_to_json(amp));
            }
            w.end_array();
        } else {
            w.value_raw(state_to_json(res.final_state));
        }
        w.end_object();
    }
    w.end_array();
    return w.str();
}

std::string table_report_to_json(const std::vector<TableCheckRow>& rows) {
    JsonWriter w;
    w.begin_array();
    for (const auto& row : rows) {
        w.begin_object();
        w.key("input");
        w.value_raw("{\"i1\":" + std::to_string(row.i1) + ",\"i4\":" + std::to_string(row.i4) +
                    "}");
        w.key("outcome");
        w.begin_array();
        w.value_int(row.s1);
        w.value_int(row.s2);
        w.end_array();
        w.key("probability");
        w.value_number(row.probability);
        w.key("overlap");
        w.value_number(row.overlap);
        w.key("pass");
        w.value_bool(row.pass);
        w.end_object();
    }
    w.end_array();
    return w.str();
}

}  // namespace kerrsim
