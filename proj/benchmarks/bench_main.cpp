// Copyright 2026 The epbound authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "epbound/entropy.hpp"
#include "epbound/maximal.hpp"
#include "epbound/models/bosonic.hpp"
#include "epbound/models/nano.hpp"
#include "epbound/models/swap.hpp"
#include "epbound/sde/analysis.hpp"
#include "epbound/sde/oracle.hpp"

namespace {

using namespace epbound;

void BM_SolveLambdaContinuous(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lambda_continuous(1.0));
  }
}
BENCHMARK(BM_SolveLambdaContinuous);

void BM_BoundDiscreteLattice(benchmark::State& state) {
  const auto lattice = SymmetricSupport::lattice(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_discrete(lattice, 1.0));
  }
}
BENCHMARK(BM_BoundDiscreteLattice);

void BM_DifferentialEntropyMaximal(benchmark::State& state) {
  const auto d = maximal_density(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(differential_entropy(d));
  }
}
BENCHMARK(BM_DifferentialEntropyMaximal);

void BM_BosonicPmfNearCritical(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(models::bosonic_pmf({1.0, 1.05}));
  }
}
BENCHMARK(BM_BosonicPmfNearCritical);

void BM_NanoAlphaFromMean(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(models::nano_alpha_from_mean(1, 2.0));
  }
}
BENCHMARK(BM_NanoAlphaFromMean);

void BM_ComposeSwapChain(benchmark::State& state) {
  const auto a = models::swap_pmf(0.7);
  const auto b = models::swap_pmf(1.1);
  const auto c = models::swap_pmf(1.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        models::compose_swaps(models::compose_swaps(a, b), c));
  }
}
BENCHMARK(BM_ComposeSwapChain);

void BM_ExactSampler(benchmark::State& state) {
  sde::SdeRunConfig cfg;
  cfg.d = 1;
  cfg.t1 = 2.0;
  cfg.t2 = 1.0;
  cfg.gamma_t = 1.0;
  cfg.n_samples = state.range(0);
  cfg.seed = 9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sde::sample_entropy_production(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExactSampler)->Arg(10000)->Arg(100000);

void BM_EmpiricalDftCheck(benchmark::State& state) {
  sde::SdeRunConfig cfg;
  cfg.d = 1;
  cfg.t1 = 2.0;
  cfg.t2 = 1.0;
  cfg.gamma_t = 1.0;
  cfg.n_samples = 200000;
  cfg.seed = 10;
  const auto batch = sde::sample_entropy_production(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sde::empirical_dft_check(batch));
  }
}
BENCHMARK(BM_EmpiricalDftCheck);

}  // namespace

BENCHMARK_MAIN();
