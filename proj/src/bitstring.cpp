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

#include "rofc/bitstring.hpp"

#include <stdexcept>

#include "rofc/errors.hpp"
#include "rofc/rng.hpp"

namespace rofc {

BitString BitString::from_string(std::string_view s) {
  BitString out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      out.bits_[i] = 1;
    } else if (s[i] != '0') {
      throw FormatError("bit string may contain only '0' and '1'");
    }
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes,
                                std::size_t bit_length) {
  if (bytes.size() != (bit_length + 7) / 8) {
    throw LengthError("byte count does not match bit length");
  }
  BitString out(bit_length);
  for (std::size_t i = 0; i < bit_length; ++i) {
    out.bits_[i] = (bytes[i >> 3] >> (7 - (i & 7))) & 1;
  }
  return out;
}

BitString BitString::random(std::size_t length) {
  std::vector<std::uint8_t> raw((length + 7) / 8);
  secure_random_bytes(raw);
  return from_bytes(raw, length);
}

BitString BitString::random(std::size_t length, SeedStream &stream) {
  std::vector<std::uint8_t> raw((length + 7) / 8);
  stream.fill(raw);
  return from_bytes(raw, length);
}

BitString BitString::operator^(const BitString &other) const {
  if (size() != other.size()) {
    throw LengthError("XOR requires equal lengths (" + std::to_string(size()) +
                      " vs " + std::to_string(other.size()) + ")");
  }
  BitString out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.bits_[i] = bits_[i] ^ other.bits_[i];
  }
  return out;
}

std::size_t BitString::hamming(const BitString &other) const {
  if (size() != other.size()) {
    throw LengthError("Hamming distance requires equal lengths (" +
                      std::to_string(size()) + " vs " +
                      std::to_string(other.size()) + ")");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    d += bits_[i] ^ other.bits_[i];
  }
  return d;
}

std::size_t BitString::weight() const {
  std::size_t w = 0;
  for (auto b : bits_) w += b;
  return w;
}

BitString BitString::prefix(std::size_t n) const {
  if (n > size()) {
    throw LengthError("prefix length exceeds string length");
  }
  BitString out(n);
  out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<long>(n));
  return out;
}

BitString BitString::complement() const {
  BitString out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.bits_[i] = bits_[i] ^ 1;
  }
  return out;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out((size() + 7) / 8, 0);
  for (std::size_t i = 0; i < size(); ++i) {
    if (bits_[i]) out[i >> 3] |= static_cast<std::uint8_t>(1u << (7 - (i & 7)));
  }
  return out;
}

std::string BitString::to_string() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

}  // namespace rofc
