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

// Seeded synthetic content for tests, benchmarks and demos.

#ifndef SEV_SYNTHETIC_H_
#define SEV_SYNTHETIC_H_

#include <cstdint>
#include <random>
#include <vector>

#include "sev/frame.h"
#include "sev/soft_edge.h"

namespace sev {

// Uniform double in [0, 1) from the top 53 bits of a 64-bit Mersenne
// Twister draw. Identical on every platform, unlike the std distributions.
inline double UnitDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n).
inline uint64_t UniformBelow(std::mt19937_64& rng, uint64_t n) {
  return static_cast<uint64_t>(UnitDouble(rng) * static_cast<double>(n));
}

// A textured background with a colored rectangle moving diagonally.
VideoSequence MakeMovingRectangleVideo(int width, int height, int frames,
                                       uint64_t seed, Rational fps = {25, 1});

// Independent random labels: 0 with probability zero_density, otherwise
// uniform over 1..k-1.
std::vector<SoftEdgeMap> RandomLabelMaps(int width, int height, int frames,
                                         int k, double zero_density,
                                         uint64_t seed);

// Smooth random image (sum of a few colored blobs plus a gradient).
Frame MakeTexturedFrame(int width, int height, uint64_t seed);

// Adds round(amplitude * u) to each sample, u uniform in [-1, 1) and fixed by
// the seed, then clamps to [0, 255]. For a fixed seed the per-sample error
// grows monotonically with amplitude.
Frame AddNoise(const Frame& frame, int amplitude, uint64_t seed);

}  // namespace sev

#endif  // SEV_SYNTHETIC_H_
