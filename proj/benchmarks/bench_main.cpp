// Copyright 2026 The tdbound Authors.
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

#include "tdbound/bounds/bounds.hpp"
#include "tdbound/montecarlo/estimate.hpp"
#include "tdbound/montecarlo/moment.hpp"
#include "tdbound/repcore/indicator.hpp"
#include "tdbound/repcore/lambda_set.hpp"
#include "tdbound/repcore/multiplicity.hpp"
#include "tdbound/solver/solver.hpp"
#include "tdbound/specfun/bessel.hpp"

namespace {

using namespace tdb;

void BM_LogBesselSequence(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto seq = specfun::log_bessel_i_sequence(8, x);
    benchmark::DoNotOptimize(seq.data());
  }
}
BENCHMARK(BM_LogBesselSequence)->Arg(1)->Arg(100)->Arg(100000);

void BM_EnumerateLambdaSet(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto ls = rep::enumerate_lambda_set(d, t);
    benchmark::DoNotOptimize(ls.data());
  }
}
BENCHMARK(BM_EnumerateLambdaSet)->Args({8, 5})->Args({64, 5})->Args({2, 5000});

void BM_ZeroWeightMultiplicity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  e.front() = 3;
  e[1] = 2;
  e[d - 2] = -2;
  e.back() = -3;
  const rep::HighestWeight lambda(e);
  for (auto _ : state) {
    auto m = rep::zero_weight_multiplicity(lambda);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_ZeroWeightMultiplicity)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_GammaCoefficients(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  e.front() = 2;
  e.back() = -2;
  const rep::HighestWeight lambda(e);
  for (auto _ : state) {
    auto g = rep::gamma_coefficients(lambda);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GammaCoefficients)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SymmetricMasterBlock(benchmark::State& state) {
  const auto p = IrrepProfile::build(rep::HighestWeight({2, 0, -1, -1}),
                                     IrrepProfile::Level::Full);
  for (auto _ : state) {
    auto r = master_bound_symmetric(p, 100, 0.5);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SymmetricMasterBlock)->Unit(benchmark::kMicrosecond);

void BM_MinSizeSearch(benchmark::State& state) {
  const TotalBound total(2, static_cast<int>(state.range(0)),
                         BoundMethod::MasterSymmetric);
  for (auto _ : state) {
    auto r = min_size_search(total, 0.5, 0.99);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MinSizeSearch)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MomentApply(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  const auto sample = mc::sample_gate_set(d, GateSetKind::Plain, 10, 1);
  const mc::MomentOperator op(sample.unitaries, t);
  mc::Vector v = mc::Vector::Ones(static_cast<Eigen::Index>(op.dimension()));
  mc::Vector out;
  for (auto _ : state) {
    op.apply(v, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(sample.unitaries.size()));
}
BENCHMARK(BM_MomentApply)
    ->Args({2, 2})
    ->Args({2, 4})
    ->Args({3, 3})
    ->Args({4, 4})
    ->Unit(benchmark::kMicrosecond);

void BM_EstimateDelta(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  const auto sample = mc::sample_gate_set(d, GateSetKind::Plain, 20, 3);
  for (auto _ : state) {
    auto r = mc::estimate_delta(sample, t);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EstimateDelta)->Args({2, 2})->Args({3, 2})->Args({2, 3})->Unit(
    benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
