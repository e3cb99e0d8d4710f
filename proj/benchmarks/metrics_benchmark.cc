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

#include <benchmark/benchmark.h>

#include "sev/metrics.h"
#include "sev/synthetic.h"

namespace sev {
namespace {

void BM_Psnr(benchmark::State& state) {
  const Frame a = MakeTexturedFrame(1920, 1080, 1);
  const Frame b = AddNoise(a, 8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Psnr(a, b));
}
BENCHMARK(BM_Psnr);

void BM_Ssim(benchmark::State& state) {
  const Frame a = MakeTexturedFrame(640, 360, 1);
  const Frame b = AddNoise(a, 8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Ssim(a, b));
}
BENCHMARK(BM_Ssim);

void BM_MsSsim(benchmark::State& state) {
  const Frame a = MakeTexturedFrame(640, 360, 1);
  const Frame b = AddNoise(a, 8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(MsSsim(a, b));
}
BENCHMARK(BM_MsSsim);

}  // namespace
}  // namespace sev

BENCHMARK_MAIN();
