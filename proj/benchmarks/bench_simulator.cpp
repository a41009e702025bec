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

#include <benchmark/benchmark.h>

#include <cmath>

#include "kerrsim/circuit_script.hpp"
#include "kerrsim/protocols.hpp"

namespace {

using namespace kerrsim;

PhotonicState chain_state(std::size_t n_qubits) {
    const DualRailRegister reg = DualRailRegister::contiguous(n_qubits);
    PhotonicState s = make_vacuum(2 * n_qubits, 1);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        s = prepare_qubit(s, reg, q, M_SQRT1_2, M_SQRT1_2);
    }
    for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
        s = apply_kerr(s, {reg.mode_a(q), reg.mode_b(q + 1), M_PI / 4.0});
    }
    return s;
}

void bm_apply_kerr(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const PhotonicState s = chain_state(n);
    const KerrSpec spec{0, 3, M_PI / 4.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_kerr(s, spec));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(s.terms().size()));
}
BENCHMARK(bm_apply_kerr)->Arg(3)->Arg(5)->Arg(7);

void bm_apply_beamsplitter(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const PhotonicState s = chain_state(n);
    const BeamSplitterSpec spec{0, 1, hadamard_bs()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_beamsplitter(s, spec));
    }
}
BENCHMARK(bm_apply_beamsplitter)->Arg(3)->Arg(5)->Arg(7);

void bm_measure_x(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DualRailRegister reg = DualRailRegister::contiguous(n);
    const PhotonicState s = chain_state(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_x(s, reg, 0));
    }
}
BENCHMARK(bm_measure_x)->Arg(3)->Arg(5)->Arg(7);

void bm_decode_qubit(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DualRailRegister reg = DualRailRegister::contiguous(n);
    const PhotonicState s = chain_state(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_qubit(s, reg));
    }
}
BENCHMARK(bm_decode_qubit)->Arg(3)->Arg(5)->Arg(7);

void bm_teleport_enumerate(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_teleportation(M_SQRT1_2, M_SQRT1_2, n, BranchPolicy::enumerate_all()));
    }
}
BENCHMARK(bm_teleport_enumerate)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void bm_cnot_enumerate(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_cnot(0, 0, BranchPolicy::enumerate_all()));
    }
}
BENCHMARK(bm_cnot_enumerate)->Unit(benchmark::kMillisecond);

void bm_verify_tables(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_tables());
    }
}
BENCHMARK(bm_verify_tables)->Unit(benchmark::kMillisecond);

void bm_teleport_oracle(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(teleport_correction_table(n));
    }
}
BENCHMARK(bm_teleport_oracle)->Arg(3)->Arg(5)->Arg(7);

const char* kTeleportSource =
    "modes 6\ncutoff 1\n"
    "qubit q1 0 1\nqubit q2 2 3\nqubit q3 4 5\n"
    "source 1\nbs 0 1 prep 0.6 0.8i\n"
    "source 3\nbs 2 3 prep 0.7071067811865476 0.7071067811865476\n"
    "source 5\nbs 4 5 prep 0.7071067811865476 0.7071067811865476\n"
    "kerr 0 3 1pi/4\nkerr 2 5 1pi/4\n"
    "measx q1\nmeasx q2\ncorrect q3 teleport\n";

void bm_parse_circuit(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_circuit(kTeleportSource));
    }
}
BENCHMARK(bm_parse_circuit);

void bm_execute_circuit(benchmark::State& state) {
    const CircuitProgram program = parse_circuit(kTeleportSource);
    for (auto _ : state) {
        benchmark::DoNotOptimize(execute_circuit(program, BranchPolicy::enumerate_all()));
    }
}
BENCHMARK(bm_execute_circuit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
