// Copyright 2026 The Sphering Authors. All Rights Reserved.
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

#include <memory>

#include "benchmark/benchmark.h"
#include "sphering/cli/csv.hpp"
#include "sphering/diagnostics.hpp"
#include "sphering/linalg.hpp"
#include "sphering/moments.hpp"
#include "sphering/whitening.hpp"

namespace sphering {
namespace {

SymMatrix SpdOfDim(Index d) {
  const Matrix q = RandomOrthogonal(d, 11);
  const Vector lambda = Vector::LinSpaced(d, 0.5, 5.0);
  return SymMatrix(q * lambda.asDiagonal() * q.transpose());
}

void BM_SymEigen(benchmark::State& state) {
  const SymMatrix s = SpdOfDim(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SymEigen(s));
}
BENCHMARK(BM_SymEigen)->RangeMultiplier(2)->Range(2, 64);

void BM_BuildModelIris(benchmark::State& state) {
  const DataMatrix x = cli::ReadCsv("iris");
  for (auto _ : state) benchmark::DoNotOptimize(BuildModel(x));
}
BENCHMARK(BM_BuildModelIris);

void BM_BuildWhitener(benchmark::State& state) {
  const auto model = std::make_shared<const CovarianceModel>(
      ModelFromCovariance(SpdOfDim(16)));
  const Method method = kAllMethods[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(MethodName(method)));
  for (auto _ : state) benchmark::DoNotOptimize(BuildWhitener(method, model));
}
BENCHMARK(BM_BuildWhitener)->DenseRange(0, 4);

void BM_CompareAllIris(benchmark::State& state) {
  const DataMatrix x = cli::ReadCsv("iris");
  for (auto _ : state) benchmark::DoNotOptimize(CompareAll(x));
}
BENCHMARK(BM_CompareAllIris);

}  // namespace
}  // namespace sphering

BENCHMARK_MAIN();
