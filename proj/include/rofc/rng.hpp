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

#ifndef ROFC_RNG_HPP_
#define ROFC_RNG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

namespace rofc {

/// Deterministic keyed pseudorandom byte stream (ChaCha20 keystream).
///
/// The same (key, domain) pair always produces the same stream, on any
/// platform. Distinct domain tags give independent streams under one key,
/// which is how one 32-byte secret safely feeds several derivations.
class SeedStream {
 public:
  /// domain is a tag of at most 12 bytes; shorter tags are zero-padded.
  SeedStream(const std::array<std::uint8_t, 32> &key, std::string_view domain);
  ~SeedStream();

  SeedStream(SeedStream &&) noexcept;
  SeedStream &operator=(SeedStream &&) noexcept;
  SeedStream(const SeedStream &) = delete;
  SeedStream &operator=(const SeedStream &) = delete;

  void fill(std::span<std::uint8_t> out);
  std::uint64_t next_u64();
  /// Uniform double in [0, 1), 53 bits of precision.
  double next_unit();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Fill from the process-wide cryptographic randomness source.
void secure_random_bytes(std::span<std::uint8_t> out);

}  // namespace rofc

#endif  // ROFC_RNG_HPP_
