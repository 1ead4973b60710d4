// Copyright 2026 The rydgate Authors
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

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "rydgate/fidelity.h"
#include "rydgate/optimize.h"
#include "rydgate/oracle.h"
#include "rydgate/propagator.h"

namespace rydgate {
namespace {

void BM_StarPropagator(benchmark::State &state) {
    std::vector<double> coupling(static_cast<std::size_t>(state.range(0)), 0.0);
    for (std::size_t i = 0; i < coupling.size(); ++i) {
        coupling[i] = 0.3 + 0.1 * static_cast<double>(i);
    }
    double theta = 1.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(star_propagator(coupling, theta));
        theta += 1e-9;
    }
}
BENCHMARK(BM_StarPropagator)->Arg(1)->Arg(2)->Arg(3)->Arg(8);

void BM_GateFidelity(benchmark::State &state) {
    double b = std::sqrt(0.1);
    ProtocolFamily family = state.range(0) == 2
                                ? ProtocolFamily::sop(b, 5)
                                : ProtocolFamily::three_qubit(b, b, Orthogonality::kFullVector, 5);
    GateSignature target = GateSignature::cphase(family.n_qubits());
    double area = 2 * kPi;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gate_fidelity(family.at(area, 2 * kPi), target));
        area += 1e-9;
    }
}
BENCHMARK(BM_GateFidelity)->Arg(2)->Arg(3);

void BM_FidelityMap(benchmark::State &state) {
    ProtocolFamily family = ProtocolFamily::sop(std::sqrt(0.1));
    AreaGrid grid = AreaGrid::in_pi_units(-8, 8, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fidelity_map(family, GateSignature::cphase(2), grid, grid));
    }
    state.SetItemsProcessed(state.iterations() * 81 * 81);
}
BENCHMARK(BM_FidelityMap)->Unit(benchmark::kMillisecond);

void BM_IntegrateBlock(benchmark::State &state) {
    Protocol protocol = ProtocolFamily::three_qubit(0.3, 0.3, Orthogonality::kFullVector).at(3 * kPi, 5 * kPi);
    SubsystemBlock block = make_block(protocol, BasisState(3, 0));
    IntegrationSettings settings;
    std::vector<PulseEnvelope> envelopes = schedule_envelopes(protocol, settings);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_block(block, envelopes, settings));
    }
}
BENCHMARK(BM_IntegrateBlock)->Unit(benchmark::kMicrosecond);

void BM_AllFactorsOptimization(benchmark::State &state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_all_factors({-1.5 * kPi, 2.5 * kPi}, std::sqrt(0.1), 0.1, seed++));
    }
}
BENCHMARK(BM_AllFactorsOptimization)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rydgate

BENCHMARK_MAIN();
