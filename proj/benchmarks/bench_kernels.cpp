// Copyright 2026 The cagekit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "cagekit/construct.hpp"
#include "cagekit/dominating.hpp"
#include "cagekit/io.hpp"
#include "cagekit/verify.hpp"

namespace {

void BM_FieldTables(benchmark::State& state) {
  for (auto _ : state) {
    cagekit::Field f(static_cast<std::uint32_t>(state.range(0)));
    benchmark::DoNotOptimize(f.spec().modulus.data());
  }
}
BENCHMARK(BM_FieldTables)->Arg(16)->Arg(256)->Arg(512)->Arg(4096);

void BM_BuildGamma(benchmark::State& state) {
  const cagekit::Field f(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto g = cagekit::build_gamma(f);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_BuildGamma)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Girth(benchmark::State& state) {
  const auto g = cagekit::build_gamma(static_cast<std::uint32_t>(state.range(0)));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cagekit::girth(g, threads));
}
BENCHMARK(BM_Girth)
    ->Args({8, 1})
    ->Args({16, 1})
    ->Args({16, 4})
    ->Unit(benchmark::kMillisecond);

void BM_Diameter(benchmark::State& state) {
  const auto g = cagekit::build_gamma(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cagekit::diameter(g));
}
BENCHMARK(BM_Diameter)->Arg(5)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_BuildPds(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto pds = cagekit::build_pds(q);
    benchmark::DoNotOptimize(pds.certificate.cardinality);
  }
}
BENCHMARK(BM_BuildPds)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Graph6(benchmark::State& state) {
  const auto g = cagekit::build_gamma(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    const auto text = cagekit::serialize(g, cagekit::GraphFormat::kGraph6);
    benchmark::DoNotOptimize(cagekit::parse_graph(text, cagekit::GraphFormat::kGraph6).size());
  }
}
BENCHMARK(BM_Graph6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
