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

#include <openssl/evp.h>

#include <cstring>
#include <vector>

#include "rofc/bitstring.hpp"
#include "rofc/errors.hpp"

namespace rofc {

Digest sha256(std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int out_len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &out_len, EVP_sha256(),
                 nullptr) != 1 ||
      out_len != kDigestBytes) {
    throw Error("digest computation failed");
  }
  return out;
}

Digest digest_bits(const BitString &bits) {
  // Domain: the bit length (32-bit little-endian) followed by the packed
  // bytes, so strings that differ only by trailing zero padding hash apart.
  std::vector<std::uint8_t> buf;
  auto packed = bits.to_bytes();
  buf.reserve(4 + packed.size());
  auto n = static_cast<std::uint32_t>(bits.size());
  buf.push_back(static_cast<std::uint8_t>(n & 0xff));
  buf.push_back(static_cast<std::uint8_t>((n >> 8) & 0xff));
  buf.push_back(static_cast<std::uint8_t>((n >> 16) & 0xff));
  buf.push_back(static_cast<std::uint8_t>((n >> 24) & 0xff));
  buf.insert(buf.end(), packed.begin(), packed.end());
  return sha256(buf);
}

bool constant_time_equal(std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) return false;
  volatile std::uint8_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc | (a[i] ^ b[i]);
  return acc == 0;
}

}  // namespace rofc
