// Copyright 2026 The rofc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROFC_BITSTRING_HPP_
#define ROFC_BITSTRING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rofc {

class SeedStream;

/// Fixed-length string of bits. Binary templates and keys are BitStrings.
///
/// XOR and Hamming distance are defined only between strings of equal
/// length; a mismatch throws LengthError. Byte packing is big-endian
/// within each byte: bit 0 of the string is the most significant bit of
/// byte 0.
class BitString {
 public:
  BitString() = default;
  /// All-zero string of the given length.
  explicit BitString(std::size_t length) : bits_(length, 0) {}

  /// Parse from a "0101..." string. Throws FormatError on other characters.
  static BitString from_string(std::string_view s);
  /// Unpack from bytes, big-endian bit order within byte.
  static BitString from_bytes(std::span<const std::uint8_t> bytes,
                              std::size_t bit_length);
  /// Uniform random bits from the process-wide cryptographic source.
  static BitString random(std::size_t length);
  /// Deterministic uniform bits drawn from a keyed stream.
  static BitString random(std::size_t length, SeedStream &stream);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool bit(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  BitString operator^(const BitString &other) const;
  bool operator==(const BitString &other) const = default;

  /// Hamming distance to an equal-length string.
  std::size_t hamming(const BitString &other) const;
  /// Number of set bits.
  std::size_t weight() const;

  /// First n bits. n must not exceed size().
  BitString prefix(std::size_t n) const;
  BitString complement() const;

  /// Pack to bytes, big-endian bit order within byte; final byte
  /// zero-padded in the low bits.
  std::vector<std::uint8_t> to_bytes() const;
  std::string to_string() const;

 private:
  std::vector<std::uint8_t> bits_;  // one byte per bit, each 0 or 1
};

}  // namespace rofc

#endif  // ROFC_BITSTRING_HPP_
