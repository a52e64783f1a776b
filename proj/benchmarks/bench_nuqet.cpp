// Copyright 2026 The nuqet Authors
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

#include <random>

#include "nuqet/entanglement.hpp"
#include "nuqet/neutrino.hpp"
#include "nuqet/qet.hpp"

namespace {

using namespace nuqet;

void BM_SldSpectral(benchmark::State &state) {
    const DensityMatrix rho = decoherence_state(0.6, 1.0, 0.3, 2.0);
    const Matrix drho = decoherence_derivative(0.6, 1.0, 0.3, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sld_spectral(rho, drho));
    }
}
BENCHMARK(BM_SldSpectral);

void BM_SldIntegral(benchmark::State &state) {
    const DensityMatrix rho = decoherence_state(0.6, 1.0, 0.3, 2.0);
    const Matrix drho = decoherence_derivative(0.6, 1.0, 0.3, 2.0);
    const auto panels = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sld_integral(rho, drho, 200.0, panels));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SldIntegral)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Qfi(benchmark::State &state) {
    const DensityMatrix rho = plane_wave_state(0.6, 1.3);
    const Matrix drho = plane_wave_derivative(0.6, 1.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfi(rho, drho));
    }
}
BENCHMARK(BM_Qfi);

void BM_LindbladEvolve(benchmark::State &state) {
    OscillationConfig config;
    config.theta = 0.6;
    config.lambda_dec = 0.5;
    const DensityMatrix start = decoherence_state(0.6, 1.0, 0.5, 0.0);
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lindblad_evolve(start, config, 20.0, steps));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LindbladEvolve)->Arg(1000)->Arg(10000);

void BM_HermitianEigen(benchmark::State &state) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    const auto dim = static_cast<std::size_t>(state.range(0));
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = normal(rng);
        for (std::size_t j = i + 1; j < dim; ++j) {
            m(i, j) = Complex(normal(rng), normal(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigen(m));
    }
}
BENCHMARK(BM_HermitianEigen)->DenseRange(2, 4);

void BM_LogNegativity(benchmark::State &state) {
    const DensityMatrix rho = decoherence_state(0.6, 1.0, 0.5, 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_negativity(embed_occupation(rho, ModeBasis::flavor(0.6))));
    }
}
BENCHMARK(BM_LogNegativity);

void BM_RandomPovmDominance(benchmark::State &state) {
    const DensityMatrix rho = decoherence_state(0.6, 1.0, 0.5, 3.0);
    const Matrix sld = sld_spectral(rho, decoherence_derivative(0.6, 1.0, 0.5, 3.0));
    std::mt19937_64 rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fisher_information(rho, sld, random_projective_povm(2, rng)));
    }
}
BENCHMARK(BM_RandomPovmDominance);

} // namespace

BENCHMARK_MAIN();
