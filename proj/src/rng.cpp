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

#include "rofc/rng.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <cstring>
#include <stdexcept>

#include "rofc/errors.hpp"

namespace rofc {

namespace {
constexpr std::size_t kChunk = 1024;
}

struct SeedStream::Impl {
  EVP_CIPHER_CTX *ctx = nullptr;
  std::uint8_t buf[kChunk];
  std::size_t pos = kChunk;  // empty

  ~Impl() {
    if (ctx != nullptr) EVP_CIPHER_CTX_free(ctx);
  }

  void refill() {
    // ChaCha20 keystream: encrypt zeros.
    static const std::uint8_t zeros[kChunk] = {};
    int out_len = 0;
    if (EVP_EncryptUpdate(ctx, buf, &out_len, zeros, kChunk) != 1 ||
        out_len != static_cast<int>(kChunk)) {
      throw Error("keystream generation failed");
    }
    pos = 0;
  }
};

SeedStream::SeedStream(const std::array<std::uint8_t, 32> &key,
                       std::string_view domain) {
  if (domain.size() > 12) {
    throw Error("stream domain tag must be at most 12 bytes");
  }
  impl_ = std::make_unique<Impl>();
  impl_->ctx = EVP_CIPHER_CTX_new();
  if (impl_->ctx == nullptr) throw std::bad_alloc();
  // OpenSSL's ChaCha20 IV: 4-byte little-endian block counter, then the
  // 12-byte nonce. The domain tag is the nonce.
  std::uint8_t iv[16] = {};
  std::memcpy(iv + 4, domain.data(), domain.size());
  if (EVP_EncryptInit_ex(impl_->ctx, EVP_chacha20(), nullptr, key.data(), iv) !=
      1) {
    throw Error("keystream initialization failed");
  }
}

SeedStream::~SeedStream() = default;
SeedStream::SeedStream(SeedStream &&) noexcept = default;
SeedStream &SeedStream::operator=(SeedStream &&) noexcept = default;

void SeedStream::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (impl_->pos == kChunk) impl_->refill();
    std::size_t take = std::min(out.size() - done, kChunk - impl_->pos);
    std::memcpy(out.data() + done, impl_->buf + impl_->pos, take);
    impl_->pos += take;
    done += take;
  }
}

std::uint64_t SeedStream::next_u64() {
  std::uint8_t raw[8];
  fill(raw);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | raw[i];  // little-endian
  return v;
}

double SeedStream::next_unit() {
  // Top 53 bits of a 64-bit draw, scaled to [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

void secure_random_bytes(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error("system randomness source failed");
  }
}

}  // namespace rofc
