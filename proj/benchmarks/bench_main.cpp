// Copyright 2026 The tracecodes Authors.
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

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "tracecodes/dft.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/kernel_family.hpp"
#include "tracecodes/orthogonality.hpp"
#include "tracecodes/sheaf.hpp"
#include "tracecodes/trace_norm.hpp"

namespace tracecodes {
namespace {

void BM_FieldMul(benchmark::State& state) {
  const FieldSpec k = FieldSpec::build(static_cast<std::uint32_t>(state.range(0)),
                                       static_cast<std::uint32_t>(state.range(1)));
  FieldElement x = k.generator();
  const FieldElement g = k.generator();
  for (auto _ : state) {
    x = k.mul(x, g);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Args({1000003, 1})->Args({3, 7})->Args({37, 2});

void BM_CyclicDft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Complex> in(n, Complex(1.0, 0.5));
  std::vector<Complex> out(n);
  for (auto _ : state) {
    cyclic_dft(in, out, -1);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_CyclicDft)->Arg(100)->Arg(20806)->Arg(1 << 16);

void BM_KernelCorrelate(benchmark::State& state) {
  const FieldSpec k = FieldSpec::build(static_cast<std::uint32_t>(state.range(0)));
  const KernelFamily fam = KernelFamily::standard(k, static_cast<int>(state.range(1)));
  const auto phi = sample_random_function(RandomFunctionSpec::rademacher(1), k);
  for (auto _ : state) benchmark::DoNotOptimize(fam.correlate(phi, 6.0));
  state.counters["kernels"] = static_cast<double>(fam.size());
}
BENCHMARK(BM_KernelCorrelate)->Args({101, 2})->Args({499, 3})->Unit(benchmark::kMillisecond);

void BM_VerifyGramFamily(benchmark::State& state) {
  const FieldSpec k = FieldSpec::build(static_cast<std::uint32_t>(state.range(0)));
  const AskClassFamily fam(k, static_cast<int>(state.range(1)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_gram_family(fam));
}
BENCHMARK(BM_VerifyGramFamily)->Args({101, 3})->Args({1009, 2})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tracecodes

BENCHMARK_MAIN();
