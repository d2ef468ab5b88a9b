// Copyright 2026 The openqfi Authors
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

#include "openqfi/bounds.hpp"
#include "openqfi/correlations.hpp"
#include "openqfi/dynamics.hpp"
#include "openqfi/linalg.hpp"
#include "openqfi/metrology.hpp"
#include "openqfi/oracle.hpp"

namespace {

const openqfi::ModelParams kParams{1.0, 0.15, 1.5};
const openqfi::InitialCondition kInit = openqfi::bell_init(0.7);

openqfi::DensityMatrix4 bench_state() {
  return openqfi::reduced_density(openqfi::propagate(kParams, kInit, 2.5));
}

void BM_propagate(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-9;  // defeat caching of the exponentials
    benchmark::DoNotOptimize(openqfi::propagate(kParams, kInit, 2.5 + t));
  }
}
BENCHMARK(BM_propagate);

void BM_eigh4(benchmark::State& state) {
  const auto rho = bench_state();
  for (auto _ : state) benchmark::DoNotOptimize(openqfi::eigh<4>(rho));
}
BENCHMARK(BM_eigh4);

void BM_psd_sqrt(benchmark::State& state) {
  const auto rho = bench_state();
  for (auto _ : state) benchmark::DoNotOptimize(openqfi::psd_sqrt<4>(rho));
}
BENCHMARK(BM_psd_sqrt);

void BM_qfi_spectral(benchmark::State& state) {
  const auto s = openqfi::propagate(kParams, kInit, 2.5);
  const auto rho = openqfi::reduced_density(s);
  const auto drho = openqfi::density_theta_derivative(s);
  for (auto _ : state) benchmark::DoNotOptimize(openqfi::qfi_spectral(rho, drho));
}
BENCHMARK(BM_qfi_spectral);

void BM_lqu_w_matrix(benchmark::State& state) {
  const auto rho = bench_state();
  for (auto _ : state) benchmark::DoNotOptimize(openqfi::lqu_w_matrix(rho));
}
BENCHMARK(BM_lqu_w_matrix);

void BM_lqu_brute_force(benchmark::State& state) {
  const auto rho = bench_state();
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(openqfi::lqu_brute_force(rho, res));
}
BENCHMARK(BM_lqu_brute_force)->Arg(32)->Arg(128);

void BM_scan_sample(benchmark::State& state) {
  openqfi::ScanConfig cfg;
  cfg.n_samples = 100;
  cfg.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(openqfi::monte_carlo_scan(cfg));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_scan_sample);

void BM_pseudomode(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        openqfi::pseudomode_evolve(kParams, kInit, 5.0, 1e-3));
}
BENCHMARK(BM_pseudomode);

void BM_bath_evolve(benchmark::State& state) {
  const auto bath = openqfi::make_bath(kParams, state.range(0), 40.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        openqfi::discretized_bath_evolve(kParams, kInit, bath, 1.0, 1e-3, 2));
}
BENCHMARK(BM_bath_evolve)->Arg(400)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
