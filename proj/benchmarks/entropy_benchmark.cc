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

#include <vector>

#include "sev/chunk.h"
#include "sev/huffman.h"
#include "sev/rle.h"
#include "sev/synthetic.h"

namespace sev {
namespace {

std::vector<SoftEdgeMap> Maps(int frames) {
  return RandomLabelMaps(240, 135, frames, 8, 0.9, 7);
}

void BM_CompressChunk(benchmark::State& state) {
  const auto maps = Maps(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CompressChunk(maps));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 240 * 135);
}
BENCHMARK(BM_CompressChunk)->Arg(1)->Arg(16)->Arg(64);

void BM_DecompressChunk(benchmark::State& state) {
  const auto maps = Maps(static_cast<int>(state.range(0)));
  const CompressedChunk chunk = CompressChunk(maps);
  for (auto _ : state) {
    benchmark::DoNotOptimize(DecompressChunk(chunk));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 240 * 135);
}
BENCHMARK(BM_DecompressChunk)->Arg(1)->Arg(16)->Arg(64);

void BM_HuffmanBuild(benchmark::State& state) {
  std::vector<uint64_t> freq(256);
  for (size_t i = 0; i < freq.size(); ++i) freq[i] = 1 + (i * i * 7919) % 10007;
  for (auto _ : state) {
    benchmark::DoNotOptimize(HuffmanBuild(freq));
  }
}
BENCHMARK(BM_HuffmanBuild);

void BM_RleTokenize(benchmark::State& state) {
  const auto maps = Maps(16);
  const std::vector<uint8_t> scan = SpatialScan(maps);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RleTokenize(scan));
  }
  state.SetBytesProcessed(state.iterations() * scan.size());
}
BENCHMARK(BM_RleTokenize);

}  // namespace
}  // namespace sev
