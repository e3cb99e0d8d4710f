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

#ifndef SEV_RLE_H_
#define SEV_RLE_H_

#include <cstdint>
#include <span>
#include <vector>

namespace sev {

inline constexpr int kMaxRun = 255;

struct RunToken {
  uint8_t label = 0;
  uint8_t run = 1;  // 1..kMaxRun

  friend bool operator==(const RunToken&, const RunToken&) = default;
};

// Maximal runs, split every kMaxRun symbols.
std::vector<RunToken> RleTokenize(std::span<const uint8_t> labels);

// Number of tokens RleTokenize would emit, without allocating them.
size_t RleTokenCount(std::span<const uint8_t> labels);

std::vector<uint8_t> RleExpand(std::span<const RunToken> tokens);

}  // namespace sev

#endif  // SEV_RLE_H_
