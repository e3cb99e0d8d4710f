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

#include "sev/partition.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "sev/errors.h"

namespace sev {
namespace {

FramePartition Complete(uint32_t n_frames, std::vector<uint32_t> keys,
                        double alpha) {
  FramePartition p;
  p.alpha = alpha;
  p.key_indices = std::move(keys);
  p.g_indices.reserve(n_frames - p.key_indices.size());
  size_t next_key = 0;
  for (uint32_t i = 0; i < n_frames; ++i) {
    if (next_key < p.key_indices.size() && p.key_indices[next_key] == i) {
      ++next_key;
    } else {
      p.g_indices.push_back(i);
    }
  }
  return p;
}

}  // namespace

FramePartition PartitionFrames(uint32_t n_frames, double alpha) {
  if (n_frames == 0) throw ArgumentError("cannot partition an empty video");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ArgumentError("alpha must lie in (0, 1], got " +
                        std::to_string(alpha));
  }
  const double scaled = std::round(alpha * static_cast<double>(n_frames));
  const uint32_t key_count = std::clamp<uint32_t>(
      static_cast<uint32_t>(scaled), 1u, n_frames);
  const uint32_t step = n_frames / key_count;
  std::vector<uint32_t> keys(key_count);
  for (uint32_t i = 0; i < key_count; ++i) keys[i] = i * step;
  return Complete(n_frames, std::move(keys), alpha);
}

FramePartition PartitionFromKeyIndices(uint32_t n_frames,
                                       std::vector<uint32_t> key_indices) {
  if (n_frames == 0) throw ArgumentError("cannot partition an empty video");
  if (key_indices.empty() || key_indices.front() != 0) {
    throw ArgumentError("key frame list must start with frame 0");
  }
  for (size_t i = 1; i < key_indices.size(); ++i) {
    if (key_indices[i] <= key_indices[i - 1]) {
      throw ArgumentError("key frame indices must be strictly increasing");
    }
  }
  if (key_indices.back() >= n_frames) {
    throw ArgumentError("key frame index " +
                        std::to_string(key_indices.back()) +
                        " is past the last frame");
  }
  const double alpha =
      static_cast<double>(key_indices.size()) / static_cast<double>(n_frames);
  return Complete(n_frames, std::move(key_indices), alpha);
}

std::vector<std::vector<uint32_t>> GroupsOfPictures(
    const FramePartition& partition) {
  std::vector<std::vector<uint32_t>> groups(partition.key_indices.size());
  size_t key = 0;
  for (uint32_t g : partition.g_indices) {
    while (key + 1 < partition.key_indices.size() &&
           partition.key_indices[key + 1] < g) {
      ++key;
    }
    groups[key].push_back(g);
  }
  return groups;
}

}  // namespace sev
