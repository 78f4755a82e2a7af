// Copyright 2026 The qfnn developers
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

#include "qfnn/tasks.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qfnn;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = Complex{gauss(rng), gauss(rng)};
        }
    }
    return 0.5 * (a + a.adjoint());
}

void BM_ExpIH(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const ComplexMatrix h = random_hermitian(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_ih(h));
    }
}
BENCHMARK(BM_ExpIH)->Arg(4)->Arg(8)->Arg(16);

void BM_EmbedGate(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const ComplexMatrix gate = exp_ih(random_hermitian(rng, 8));
    const std::vector<int> wires = {0, 1, 2};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(embed(gate, wires, n));
    }
}
BENCHMARK(BM_EmbedGate)->Arg(4)->Arg(6);

void BM_ApplyOn(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix gate = exp_ih(random_hermitian(rng, 8));
    DensityMatrix rho = DensityMatrix::zero_state(n);
    const std::vector<int> wires = {n - 1, 0, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho.apply_on(gate, wires));
    }
}
BENCHMARK(BM_ApplyOn)->Arg(3)->Arg(6);

void BM_TeleportOutputState(benchmark::State& state) {
    TrainingTask task = build_teleport_task();
    const Network net = task.network.with_params(teleport_oracle_params());
    const DensityMatrix psi = plus_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(net.output_state(psi));
    }
}
BENCHMARK(BM_TeleportOutputState);

void BM_AutoencoderTaskCost(benchmark::State& state) {
    TrainingTask task = build_autoencoder_task(autoencoder_input_preset("bell"));
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<double> params(task.network.param_count());
    for (auto& p : params) {
        p = uniform(rng);
    }
    const Network net = task.network.with_params(params);
    const DensityMatrix input = bell_phi_plus();
    for (auto _ : state) {
        benchmark::DoNotOptimize(task_cost(task, net, input));
    }
}
BENCHMARK(BM_AutoencoderTaskCost);

void BM_TeleportGradientStep(benchmark::State& state) {
    TrainingTask task = build_teleport_task();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<double> params(task.network.param_count());
    for (auto& p : params) {
        p = uniform(rng);
    }
    const DensityMatrix input = plus_state();
    const CostFn cost = [&](std::span<const double> p) {
        return task_cost(task, task.network.with_params(p), input);
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            gradient_fd(cost, params, 1e-4, GradientMode::Forward,
                        static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_TeleportGradientStep)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
