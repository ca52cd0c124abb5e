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

#ifndef ROFC_DIGEST_HPP_
#define ROFC_DIGEST_HPP_

#include <array>
#include <cstdint>
#include <span>

namespace rofc {

class BitString;

inline constexpr std::size_t kDigestBytes = 32;

using Digest = std::array<std::uint8_t, kDigestBytes>;

Digest sha256(std::span<const std::uint8_t> data);

/// Canonical digest of a bit-string: SHA-256 over the little-endian
/// 32-bit bit length followed by the packed bytes. The length prefix
/// keeps strings of different lengths with equal packing distinct.
Digest digest_bits(const BitString &bits);

/// Constant-time comparison of two equal-length byte spans.
bool constant_time_equal(std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b);

}  // namespace rofc

#endif  // ROFC_DIGEST_HPP_
