// Copyright 2026 The pencil Authors.
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

#include "pencil/derive.hpp"
#include "pencil/invariant.hpp"
#include "pencil/paper_constants.hpp"
#include "pencil/poly_io.hpp"
#include "pencil/resultant.hpp"

namespace {

using pencil::InnerResultantMethod;
using pencil::InvariantOptions;

static void BM_DeriveAll(benchmark::State& state) {
  const auto triple = pencil::paper_constants().triple();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pencil::derive_all(triple));
  }
}
BENCHMARK(BM_DeriveAll);

static void BM_ResultantSubresultant(benchmark::State& state) {
  const auto& c = pencil::paper_constants();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pencil::resultant(c.P, c.A, 8, 9));
  }
}
BENCHMARK(BM_ResultantSubresultant);

static void BM_ResultantSylvester(benchmark::State& state) {
  const auto& c = pencil::paper_constants();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pencil::sylvester_resultant(c.P, c.A, 8, 9));
  }
}
BENCHMARK(BM_ResultantSylvester);

static void BM_Phi34(benchmark::State& state) {
  const auto& c = pencil::paper_constants();
  const auto g = c.f2 * c.f2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pencil::phi(c.f3, g, c.f4, 3, 4));
  }
}
BENCHMARK(BM_Phi34);

// Arg 0: method (0 interpolation, 1 polynomial Bareiss); arg 1: threads.
static void BM_PhiPAB(benchmark::State& state) {
  const auto& c = pencil::paper_constants();
  InvariantOptions options;
  options.method = state.range(0) == 0 ? InnerResultantMethod::Interpolation
                                       : InnerResultantMethod::PolynomialBareiss;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pencil::phi(c.P, c.A, c.B, 8, 9, options));
  }
}
BENCHMARK(BM_PhiPAB)->Args({0, 1})->Args({0, 4})->Args({1, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
