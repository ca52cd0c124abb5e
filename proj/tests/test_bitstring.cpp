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

#include <array>

#include "doctest.h"
#include "rofc/errors.hpp"
#include "rofc/rng.hpp"

using rofc::BitString;

TEST_CASE("construction and string round trip") {
  BitString z(5);
  CHECK(z.size() == 5);
  CHECK(z.weight() == 0);
  CHECK(z.to_string() == "00000");

  BitString b = BitString::from_string("10110");
  CHECK(b.size() == 5);
  CHECK(b.bit(0));
  CHECK(!b.bit(1));
  CHECK(b.bit(2));
  CHECK(b.to_string() == "10110");
  CHECK(b.weight() == 3);

  CHECK(BitString::from_string("").empty());
  CHECK_THROWS_AS(BitString::from_string("10x1"), rofc::FormatError);
}

TEST_CASE("byte packing is big-endian within each byte") {
  // Bit 0 of the string is the most significant bit of byte 0.
  const std::array<std::uint8_t, 2> bytes = {0b10110000, 0b01000000};
  BitString b = BitString::from_bytes(bytes, 10);
  CHECK(b.to_string() == "1011000001");
  CHECK(b.to_bytes() == std::vector<std::uint8_t>{0b10110000, 0b01000000});

  // Unused low bits of the last byte are zero-padded on output.
  BitString short_bits = BitString::from_string("111");
  CHECK(short_bits.to_bytes() == std::vector<std::uint8_t>{0b11100000});

  // Byte count must match ceil(bit_length / 8).
  CHECK_THROWS_AS(BitString::from_bytes(bytes, 3), rofc::LengthError);
  CHECK_THROWS_AS(BitString::from_bytes(bytes, 17), rofc::LengthError);
}

TEST_CASE("xor and hamming demand equal lengths") {
  BitString a = BitString::from_string("1100");
  BitString b = BitString::from_string("1010");
  CHECK((a ^ b).to_string() == "0110");
  CHECK(a.hamming(b) == 2);
  CHECK(a.hamming(a) == 0);

  BitString longer = BitString::from_string("11000");
  CHECK_THROWS_AS(a ^ longer, rofc::LengthError);
  CHECK_THROWS_AS(a.hamming(longer), rofc::LengthError);
}

TEST_CASE("xor is self-inverse") {
  BitString a = BitString::from_string("100111010001");
  BitString b = BitString::from_string("010101010101");
  CHECK(((a ^ b) ^ b) == a);
}

TEST_CASE("prefix and complement") {
  BitString b = BitString::from_string("110010");
  CHECK(b.prefix(3).to_string() == "110");
  CHECK(b.prefix(0).empty());
  CHECK(b.prefix(6) == b);
  CHECK_THROWS_AS(b.prefix(7), rofc::LengthError);
  CHECK(b.complement().to_string() == "001101");
  CHECK(b.complement().complement() == b);
}

TEST_CASE("set and flip") {
  BitString b(4);
  b.set(1, true);
  b.set(3, true);
  CHECK(b.to_string() == "0101");
  b.flip(0);
  b.flip(1);
  CHECK(b.to_string() == "1001");
}

TEST_CASE("seeded random bits are deterministic") {
  std::array<std::uint8_t, 32> key{};
  key[0] = 42;
  rofc::SeedStream s1(key, "test");
  rofc::SeedStream s2(key, "test");
  BitString a = BitString::random(257, s1);
  BitString b = BitString::random(257, s2);
  CHECK(a.size() == 257);
  CHECK(a == b);

  rofc::SeedStream s3(key, "other");
  CHECK(BitString::random(257, s3) != a);
}

TEST_CASE("crypto random bits vary") {
  BitString a = BitString::random(256);
  BitString b = BitString::random(256);
  CHECK(a.size() == 256);
  CHECK(a != b);
}
