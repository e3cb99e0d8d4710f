// Copyright 2026 The SEV Codec Authors. All Rights Reserved.
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "sev/canny.h"
#include "sev/downsample.h"
#include "sev/soft_edge.h"
#include "sev/synthetic.h"

namespace sev {
namespace {

void BM_Downsample(benchmark::State& state) {
  const Frame f = MakeTexturedFrame(1920, 1080, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Downsample(f, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Downsample)->Arg(4)->Arg(8);

void BM_DetectEdges(benchmark::State& state) {
  const Frame f = Downsample(MakeTexturedFrame(1920, 1080, 2), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(DetectFrameEdges(f, {}));
  }
}
BENCHMARK(BM_DetectEdges);

void BM_FitCodebook(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<Rgb> colors(20000);
  for (Rgb& c : colors) {
    c = {static_cast<uint8_t>(UniformBelow(rng, 256)),
         static_cast<uint8_t>(UniformBelow(rng, 256)),
         static_cast<uint8_t>(UniformBelow(rng, 256))};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        FitCodebook(colors, static_cast<int>(state.range(0)), 0));
  }
}
BENCHMARK(BM_FitCodebook)->Arg(8)->Arg(64);

void BM_QuantizeSoftEdges(benchmark::State& state) {
  const Frame f = Downsample(MakeTexturedFrame(1920, 1080, 4), 4);
  const EdgeMap edges = DetectFrameEdges(f, {});
  const Codebook book = FitCodebook(EdgeColors(f, edges), 16, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(QuantizeSoftEdges(f, edges, book));
  }
}
BENCHMARK(BM_QuantizeSoftEdges);

}  // namespace
}  // namespace sev
