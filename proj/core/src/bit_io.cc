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

#include "sev/bit_io.h"

#include <utility>

#include "sev/errors.h"

namespace sev {

void BitWriter::Write(uint32_t bits, int count) {
  for (int i = count - 1; i >= 0; --i) {
    const uint64_t bit_in_byte = bit_count_ & 7;
    if (bit_in_byte == 0) bytes_.push_back(0);
    if ((bits >> i) & 1u) {
      bytes_.back() |= static_cast<uint8_t>(0x80u >> bit_in_byte);
    }
    ++bit_count_;
  }
}

BitReader::BitReader(std::span<const uint8_t> bytes, uint64_t bit_limit)
    : bytes_(bytes), limit_(bit_limit) {
  if (bit_limit > static_cast<uint64_t>(bytes.size()) * 8) {
    throw CorruptStreamError("truncated payload: " +
                             std::to_string(bit_limit) + " bits declared, " +
                             std::to_string(bytes.size() * 8) + " available");
  }
}

int BitReader::ReadBit() {
  if (pos_ >= limit_) {
    throw CorruptStreamError("truncated payload: read past bit " +
                             std::to_string(limit_));
  }
  const int bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1;
  ++pos_;
  return bit;
}

void ByteWriter::U16(uint16_t v) {
  U8(static_cast<uint8_t>(v));
  U8(static_cast<uint8_t>(v >> 8));
}

void ByteWriter::U32(uint32_t v) {
  for (int i = 0; i < 4; ++i) U8(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::U64(uint64_t v) {
  for (int i = 0; i < 8; ++i) U8(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::Varint(uint64_t v) {
  while (v >= 0x80) {
    U8(static_cast<uint8_t>(v | 0x80));
    v >>= 7;
  }
  U8(static_cast<uint8_t>(v));
}

void ByteWriter::Bytes(std::span<const uint8_t> data) {
  out_.insert(out_.end(), data.begin(), data.end());
}

ByteReader::ByteReader(std::span<const uint8_t> data, std::string context,
                       Failure failure)
    : data_(data), context_(std::move(context)), failure_(failure) {}

void ByteReader::Fail(const std::string& what) const {
  const std::string msg = context_ + ": " + what + " at offset " +
                          std::to_string(pos_);
  if (failure_ == Failure::kCorrupt) throw CorruptStreamError(msg);
  throw FormatError(msg);
}

void ByteReader::Need(size_t n, const char* what) {
  if (remaining() < n) {
    Fail(std::string("truncated while reading ") + what);
  }
}

uint8_t ByteReader::U8() {
  Need(1, "u8");
  return data_[pos_++];
}

uint16_t ByteReader::U16() {
  Need(2, "u16");
  const uint16_t v = static_cast<uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
  pos_ += 2;
  return v;
}

uint32_t ByteReader::U32() {
  Need(4, "u32");
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= uint32_t{data_[pos_ + i]} << (8 * i);
  pos_ += 4;
  return v;
}

uint64_t ByteReader::U64() {
  Need(8, "u64");
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= uint64_t{data_[pos_ + i]} << (8 * i);
  pos_ += 8;
  return v;
}

uint64_t ByteReader::Varint() {
  uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    Need(1, "varint");
    const uint8_t byte = data_[pos_++];
    v |= uint64_t{byte & 0x7Fu} << shift;
    if ((byte & 0x80) == 0) {
      // Reject over-long encodings so that re-serialization is exact.
      if (byte == 0 && shift > 0) Fail("non-canonical varint");
      return v;
    }
  }
  Fail("varint longer than 64 bits");
}

std::span<const uint8_t> ByteReader::Bytes(size_t n) {
  Need(n, "byte block");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

}  // namespace sev
