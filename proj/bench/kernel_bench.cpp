// Copyright 2026 The qfp Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial versus OpenMP statevector kernels.

#include <cmath>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qfp/kernels.hpp"

namespace {

using namespace qfp;

std::vector<Amplitude> random_state(std::size_t qubits) {
    std::mt19937_64 rng(qubits);
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(std::size_t{1} << qubits);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return amps;
}

template <bool Parallel> void bm_apply(benchmark::State &state) {
    const auto q = static_cast<std::size_t>(state.range(0));
    auto amps = random_state(q);
    const Matrix2 m = gate_matrix(GateOp::u(q / 2, 0.7));
    const std::vector<Control> controls{{0, 1}, {q - 1, 0}};
    const auto mask = kernels::make_control_mask(controls);
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::parallel::apply_single_qubit(amps, q / 2, mask, m);
        } else {
            kernels::serial::apply_single_qubit(amps, q / 2, mask, m);
        }
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(amps.size()));
}

template <bool Parallel> void bm_marginal(benchmark::State &state) {
    const auto q = static_cast<std::size_t>(state.range(0));
    const auto amps = random_state(q);
    const std::vector<Qubit> qubits{0, 1, q - 2, q - 1};
    std::vector<double> out(16);
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::parallel::marginal_probabilities(amps, qubits, out);
        } else {
            kernels::serial::marginal_probabilities(amps, qubits, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(amps.size()));
}

} // namespace

BENCHMARK(bm_apply<false>)->DenseRange(16, 24, 4);
BENCHMARK(bm_apply<true>)->DenseRange(16, 24, 4);
BENCHMARK(bm_marginal<false>)->DenseRange(16, 24, 4);
BENCHMARK(bm_marginal<true>)->DenseRange(16, 24, 4);

BENCHMARK_MAIN();
