// Copyright 2026 The cavity-gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference against the OpenMP kernel for each parallel hot spot.

#include <benchmark/benchmark.h>

#include "cavity/compass.hpp"
#include "cavity/detector.hpp"
#include "cavity/fidelity.hpp"
#include "cavity/photon_gate.hpp"
#include "cavity/sweep.hpp"

namespace {

using namespace cavity;

template <auto Fn>
void BM_ProcessFidelity(benchmark::State &state) {
    auto table = photon_gate::coefficient_table({static_cast<int>(state.range(0)), kPi / 4.0}, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(table));
}
BENCHMARK(BM_ProcessFidelity<&fidelity::serial::process_fidelity>)->Name("process_fidelity/serial")->Arg(25)->Arg(101);
BENCHMARK(BM_ProcessFidelity<&fidelity::process_fidelity>)->Name("process_fidelity/omp")->Arg(25)->Arg(101);

template <auto Fn>
void BM_Protocol(benchmark::State &state) {
    detector::ProtocolSimConfig cfg;
    cfg.kappa_over_g = 0.3;
    cfg.runs = static_cast<std::size_t>(state.range(0));
    cfg.seed = 3;
    for (auto _ : state) benchmark::DoNotOptimize(Fn(cfg).gate_time_mean);
}
BENCHMARK(BM_Protocol<&detector::serial::simulate_protocol>)->Name("simulate_protocol/serial")->Arg(20000);
BENCHMARK(BM_Protocol<&detector::simulate_protocol>)->Name("simulate_protocol/omp")->Arg(20000);

template <auto Fn>
void BM_LogicalRate(benchmark::State &state) {
    auto code = compass::build_code(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(code, 0.01, 0.01, 2000, 7).failures);
}
BENCHMARK(BM_LogicalRate<&compass::serial::logical_error_rate>)->Name("logical_error_rate/serial")->Arg(3)->Arg(5);
BENCHMARK(BM_LogicalRate<&compass::logical_error_rate>)->Name("logical_error_rate/omp")->Arg(3)->Arg(5);

template <auto Fn>
void BM_Sweep(benchmark::State &state) {
    sweep::SweepConfig cfg;
    cfg.protocol = sweep::Protocol::GeoPhase;
    cfg.m = {9, 25, 49};
    cfg.kappa_over_g.clear();
    for (int i = 0; i <= 100; ++i) cfg.kappa_over_g.push_back(0.002 * i);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(cfg).size());
}
BENCHMARK(BM_Sweep<&sweep::serial::run_sweep>)->Name("run_sweep/serial");
BENCHMARK(BM_Sweep<&sweep::run_sweep>)->Name("run_sweep/omp");

}  // namespace

BENCHMARK_MAIN();
