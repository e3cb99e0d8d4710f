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

#ifndef SEV_PARTITION_H_
#define SEV_PARTITION_H_

#include <cstdint>
#include <vector>

namespace sev {

// Split of frame indices into key frames (sent through the first-stage codec)
// and G-frames (sent only as soft edge maps). Both lists are sorted, disjoint
// and together cover 0..N-1; index 0 is always a key frame.
struct FramePartition {
  std::vector<uint32_t> key_indices;
  std::vector<uint32_t> g_indices;
  double alpha = 1.0;

  size_t frame_count() const { return key_indices.size() + g_indices.size(); }
};

// N_I = max(1, round(alpha * n_frames)) key frames at i * floor(N / N_I).
FramePartition PartitionFrames(uint32_t n_frames, double alpha);

// Explicit key-frame list. Must be strictly increasing, start at 0 and stay
// below n_frames.
FramePartition PartitionFromKeyIndices(uint32_t n_frames,
                                       std::vector<uint32_t> key_indices);

// Groups of G-frames that follow each key frame, one entry per key frame
// (possibly empty).
std::vector<std::vector<uint32_t>> GroupsOfPictures(
    const FramePartition& partition);

}  // namespace sev

#endif  // SEV_PARTITION_H_
