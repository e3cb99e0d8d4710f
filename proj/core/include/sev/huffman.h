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

// Length-limited canonical Huffman codes.
//
// Tree construction repeatedly merges the two lowest-weight nodes. Equal
// weights are ordered leaves first (by symbol), then internal nodes by
// creation order, which makes the lengths a pure function of the
// frequencies. Codes are assigned canonically: shorter codes first, equal
// lengths by ascending symbol, so a table is fully described by its lengths.

#ifndef SEV_HUFFMAN_H_
#define SEV_HUFFMAN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sev/bit_io.h"

namespace sev {

inline constexpr int kMaxCodeLength = 15;

class HuffmanTable {
 public:
  HuffmanTable() = default;

  // Throws ArgumentError if a length exceeds kMaxCodeLength, the Kraft sum
  // exceeds one, or no symbol is present.
  static HuffmanTable FromLengths(std::vector<uint8_t> lengths);
  // Non-throwing validity check for untrusted lengths.
  static bool ValidLengths(std::span<const uint8_t> lengths);

  size_t alphabet_size() const { return lengths_.size(); }
  const std::vector<uint8_t>& lengths() const { return lengths_; }
  uint8_t length(int symbol) const { return lengths_[symbol]; }
  uint16_t code(int symbol) const { return codes_[symbol]; }
  bool present(int symbol) const { return lengths_[symbol] != 0; }

  void Encode(int symbol, BitWriter& out) const {
    out.Write(codes_[symbol], lengths_[symbol]);
  }
  // Throws CorruptStreamError on a bit pattern that maps to no symbol.
  int Decode(BitReader& in) const;

  // Sum over present symbols of freq * length.
  uint64_t Cost(std::span<const uint64_t> frequencies) const;

  friend bool operator==(const HuffmanTable& a, const HuffmanTable& b) {
    return a.lengths_ == b.lengths_;
  }

 private:
  std::vector<uint8_t> lengths_;
  std::vector<uint16_t> codes_;
  // Canonical decoding tables, indexed by code length.
  std::vector<uint16_t> count_per_length_;
  std::vector<uint16_t> sorted_symbols_;
};

// Optimal (then length-limited) prefix code for the frequencies; symbols with
// zero frequency are absent. A single present symbol gets length 1. Throws
// ArgumentError if every frequency is zero.
HuffmanTable HuffmanBuild(std::span<const uint64_t> frequencies);

// Unlimited optimal code lengths, before the kMaxCodeLength adjustment.
std::vector<uint8_t> HuffmanCodeLengths(std::span<const uint64_t> frequencies);

// Sum of 2^(max_len - len) over present symbols; a valid table satisfies
// KraftNumerator <= 2^max_len.
uint64_t KraftNumerator(std::span<const uint8_t> lengths, int max_len);

}  // namespace sev

#endif  // SEV_HUFFMAN_H_
