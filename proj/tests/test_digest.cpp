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

#include "rofc/digest.hpp"

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "rofc/bitstring.hpp"

namespace {

std::string to_hex(const rofc::Digest &d) {
  static const char *digits = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : d) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

rofc::Digest hash_str(const std::string &s) {
  return rofc::sha256(std::span(
      reinterpret_cast<const std::uint8_t *>(s.data()), s.size()));
}

}  // namespace

TEST_CASE("sha256 matches published test vectors") {
  CHECK(to_hex(hash_str("")) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(to_hex(hash_str("abc")) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(to_hex(hash_str(
            "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")) ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("digest_bits hashes the length prefix plus packed bytes") {
  const rofc::BitString bits = rofc::BitString::from_string("10110");
  // Oracle: assemble the preimage by hand per the documented layout.
  std::vector<std::uint8_t> preimage = {5, 0, 0, 0, 0b10110000};
  CHECK(rofc::digest_bits(bits) == rofc::sha256(preimage));
}

TEST_CASE("digest_bits separates lengths with equal packing") {
  // "1" and "10" pack to the same byte 0x80; only the length differs.
  const auto one = rofc::digest_bits(rofc::BitString::from_string("1"));
  const auto one_zero = rofc::digest_bits(rofc::BitString::from_string("10"));
  CHECK(one != one_zero);
}

TEST_CASE("digest_bits avalanche on single-bit flips") {
  rofc::BitString bits = rofc::BitString::random(64);
  const auto original = rofc::digest_bits(bits);
  bits.flip(17);
  const auto flipped = rofc::digest_bits(bits);
  CHECK(original != flipped);
  // Digests of independent inputs should differ in many bytes.
  std::size_t differing = 0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    differing += original[i] != flipped[i] ? 1 : 0;
  }
  CHECK(differing > 16);
}

TEST_CASE("constant_time_equal compares exactly") {
  std::vector<std::uint8_t> a = {1, 2, 3, 4};
  std::vector<std::uint8_t> b = {1, 2, 3, 4};
  std::vector<std::uint8_t> c = {1, 2, 3, 5};
  std::vector<std::uint8_t> d = {1, 2, 3};
  CHECK(rofc::constant_time_equal(a, b));
  CHECK(!rofc::constant_time_equal(a, c));
  CHECK(!rofc::constant_time_equal(a, d));
  CHECK(rofc::constant_time_equal(std::span<const std::uint8_t>(),
                                  std::span<const std::uint8_t>()));
}
