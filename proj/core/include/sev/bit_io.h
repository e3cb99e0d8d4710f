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

// MSB-first bit packing plus little-endian byte helpers.

#ifndef SEV_BIT_IO_H_
#define SEV_BIT_IO_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sev {

class BitWriter {
 public:
  // Appends the low `count` bits of `bits`, most significant first.
  void Write(uint32_t bits, int count);

  uint64_t bit_count() const { return bit_count_; }
  // Zero-padded to the next byte boundary.
  const std::vector<uint8_t>& bytes() const { return bytes_; }
  std::vector<uint8_t> TakeBytes() { return std::move(bytes_); }

 private:
  std::vector<uint8_t> bytes_;
  uint64_t bit_count_ = 0;
};

class BitReader {
 public:
  // Reads at most `bit_limit` bits from `bytes`.
  BitReader(std::span<const uint8_t> bytes, uint64_t bit_limit);

  // Returns 0 or 1; throws CorruptStreamError past the limit.
  int ReadBit();
  uint64_t position() const { return pos_; }
  uint64_t remaining() const { return limit_ - pos_; }

 private:
  std::span<const uint8_t> bytes_;
  uint64_t limit_;
  uint64_t pos_ = 0;
};

// Growable little-endian byte sink.
class ByteWriter {
 public:
  void U8(uint8_t v) { out_.push_back(v); }
  void U16(uint16_t v);
  void U32(uint32_t v);
  void U64(uint64_t v);
  // Unsigned LEB128.
  void Varint(uint64_t v);
  void Bytes(std::span<const uint8_t> data);

  size_t size() const { return out_.size(); }
  const std::vector<uint8_t>& bytes() const { return out_; }
  std::vector<uint8_t> Take() { return std::move(out_); }

 private:
  std::vector<uint8_t> out_;
};

// Bounds-checked little-endian reader. Every failure throws the exception
// type chosen by the owner (FormatError for containers, CorruptStreamError
// for chunks) with `context` in the message.
class ByteReader {
 public:
  enum class Failure { kFormat, kCorrupt };

  ByteReader(std::span<const uint8_t> data, std::string context,
             Failure failure = Failure::kFormat);

  uint8_t U8();
  uint16_t U16();
  uint32_t U32();
  uint64_t U64();
  uint64_t Varint();
  std::span<const uint8_t> Bytes(size_t n);

  size_t offset() const { return pos_; }
  size_t remaining() const { return data_.size() - pos_; }
  [[noreturn]] void Fail(const std::string& what) const;

 private:
  void Need(size_t n, const char* what);

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
  std::string context_;
  Failure failure_;
};

}  // namespace sev

#endif  // SEV_BIT_IO_H_
