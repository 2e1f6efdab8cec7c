// Copyright 2026 The nilrec Authors
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

#include "nilrec/combinatorics.hpp"
#include "nilrec/measure.hpp"
#include "nilrec/monte_carlo.hpp"
#include "nilrec/systems.hpp"
#include "nilrec/torus_geometry.hpp"
#include "nilrec/verification.hpp"

namespace {

using namespace nilrec;
using dynamics::SystemKind;

const LatticePointSet& Lambda() {
  static const auto set = combinatorics::CornerFreeEnumerate(combinatorics::DigitProfile(2, 1));
  return set;
}

void BM_CornerFreeEnumerate(benchmark::State& state) {
  const combinatorics::DigitProfile p(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(combinatorics::CornerFreeEnumerate(p));
}
BENCHMARK(BM_CornerFreeEnumerate)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VerifyCornerFree(benchmark::State& state) {
  const auto set = combinatorics::CornerFreeEnumerate(combinatorics::DigitProfile(2, 2));
  for (auto _ : state) benchmark::DoNotOptimize(verification::VerifyCornerFree(set));
}
BENCHMARK(BM_VerifyCornerFree)->Unit(benchmark::kMillisecond);

void BM_Behrend(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(combinatorics::BehrendAp3Construct(n));
}
BENCHMARK(BM_Behrend)->Arg(100)->Arg(10000);

void BM_SharedShiftT13(benchmark::State& state) {
  const auto boxes = torus::BoxUnionFromSet(Lambda(), 81);
  const auto table = dynamics::ReduceShifts(dynamics::BuiltinSystem(SystemKind::kT13), 2).table;
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus::TripleIntersectionMeasureSharedShift(boxes, table));
  }
}
BENCHMARK(BM_SharedShiftT13)->Unit(benchmark::kMillisecond);

void BM_FactorizedT11(benchmark::State& state) {
  const auto slice = combinatorics::ThreePointFreeFromCornerFree(Lambda()).slice;
  const auto boxes = torus::BoxUnionFromSet(slice, 81);
  const auto table = dynamics::ReduceShifts(dynamics::BuiltinSystem(SystemKind::kT11), 2).table;
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus::TripleIntersectionMeasureFactorized(boxes, table));
  }
}
BENCHMARK(BM_FactorizedT11)->Unit(benchmark::kMillisecond);

void BM_GeneralT12(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto s = combinatorics::BehrendAp3Construct(n);
  const auto boxes = torus::BoxUnionFromSet(s, static_cast<std::int64_t>(n));
  const auto table = dynamics::ReduceShifts(dynamics::BuiltinSystem(SystemKind::kT12), 1).table;
  for (auto _ : state) benchmark::DoNotOptimize(torus::IntersectionMeasure(boxes, table));
}
BENCHMARK(BM_GeneralT12)->Arg(20)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_MonteCarloT13(benchmark::State& state) {
  const auto boxes = torus::BoxUnionFromSet(Lambda(), 81);
  const auto system = dynamics::BuiltinSystem(SystemKind::kT13);
  torus::McConfig config;
  config.samples = 100000;
  config.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus::MonteCarloMeasure(system, boxes, 2, config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.samples));
}
BENCHMARK(BM_MonteCarloT13)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
