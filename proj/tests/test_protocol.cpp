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

#include "rofc/protocol.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "rofc/errors.hpp"
#include "rofc/record_store.hpp"

using rofc::AuthDecision;
using rofc::AuthFailure;
using rofc::BitString;
using rofc::CodecSpec;
using rofc::FeatureVector;
using rofc::QuantizerSettings;
using rofc::Seed;

namespace {

FeatureVector random_feature(std::size_t dim, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FeatureVector f(dim);
  for (double &v : f) v = unit(rng);
  return f;
}

BitString random_key(std::size_t k, std::mt19937_64 &rng) {
  BitString b(k);
  for (std::size_t i = 0; i < k; ++i) b.set(i, rng() & 1);
  return b;
}

Seed seed_from(std::mt19937_64 &rng) {
  Seed s;
  for (auto &byte : s.bytes) byte = static_cast<std::uint8_t>(rng());
  return s;
}

}  // namespace

TEST_CASE("enrolled user authenticates with zero corrections") {
  std::mt19937_64 rng(301);
  const std::size_t dim = 64;
  const CodecSpec codec = CodecSpec::fit("ham74+rep3", dim);
  const QuantizerSettings settings;
  for (int trial = 0; trial < 25; ++trial) {
    const FeatureVector feature = random_feature(dim, rng);
    const auto result =
        rofc::enroll("alice", feature, seed_from(rng),
                     random_key(codec.message_bits(), rng), codec, settings);
    CHECK(result.device.user_id == "alice");
    CHECK(result.server.user_id == "alice");
    CHECK(result.server.dim == dim);
    CHECK(result.server.truncation_len == codec.codeword_bits());
    CHECK_FALSE(result.server.revoked);

    const AuthDecision d =
        rofc::authenticate(feature, result.device, result.server);
    CHECK(d.accepted);
    REQUIRE(d.corrected_bits.has_value());
    CHECK(*d.corrected_bits == 0);
    CHECK_FALSE(d.failure_reason.has_value());
  }
}

TEST_CASE("identical inputs give byte-identical server records") {
  std::mt19937_64 rng(307);
  const std::size_t dim = 32;
  const CodecSpec codec = CodecSpec::fit("rep3", dim);
  const FeatureVector feature = random_feature(dim, rng);
  const Seed seed = seed_from(rng);
  const BitString key = random_key(codec.message_bits(), rng);

  const auto a = rofc::enroll("bob", feature, seed, key, codec, {});
  const auto b = rofc::enroll("bob", feature, seed, key, codec, {});
  CHECK(rofc::serialize_server_record(a.server) ==
        rofc::serialize_server_record(b.server));
}

TEST_CASE("noise below the quantization margin is absorbed") {
  // With one bit per component the decision threshold is the projected
  // reference itself. Perturb the projected values away from their
  // thresholds by construction: inverse-rotate a margin vector so the
  // pipeline sees projected values at distance exactly 0.2 from the
  // threshold, then add feature noise below 0.2 / sqrt(2) per pair.
  std::mt19937_64 rng(311);
  const std::size_t dim = 32;
  const CodecSpec codec = CodecSpec::fit("rep3", dim);
  const QuantizerSettings settings;
  const Seed seed = seed_from(rng);
  const auto params = rofc::derive_params(seed, dim);

  // Build a feature whose projection lands at threshold +- 0.2 per slot.
  std::vector<double> target(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    target[i] = params.translation[i] + ((rng() & 1) ? 0.2 : -0.2);
  }
  // Invert y = R x + t blockwise (R is a rotation, its inverse is its
  // transpose), then undo the -0.5 centering.
  FeatureVector feature(dim);
  for (std::size_t blk = 0; blk < dim / 2; ++blk) {
    const double c = std::cos(params.angles[blk]);
    const double s = std::sin(params.angles[blk]);
    const double u = target[2 * blk] - params.translation[2 * blk];
    const double v = target[2 * blk + 1] - params.translation[2 * blk + 1];
    feature[2 * blk] = c * u - s * v + 0.5;
    feature[2 * blk + 1] = s * u + c * v + 0.5;
  }

  const BitString key = random_key(codec.message_bits(), rng);
  const auto result = rofc::enroll("carol", feature, seed, key, codec,
                                   settings);

  // An isometry maps a ball of radius r to a ball of radius r, so feature
  // noise of euclidean norm < 0.2 cannot cross any threshold.
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    FeatureVector noisy = feature;
    const double per_slot = 0.19 / std::sqrt(static_cast<double>(dim));
    for (double &v : noisy) v += per_slot * unit(rng);
    const AuthDecision d = rofc::authenticate(noisy, result.device,
                                              result.server);
    CHECK(d.accepted);
    CHECK(*d.corrected_bits == 0);
  }
}

TEST_CASE("wrong device seed is rejected as a digest mismatch") {
  std::mt19937_64 rng(313);
  const std::size_t dim = 128;
  const CodecSpec codec = CodecSpec::fit("ham74+rep3", dim);
  const FeatureVector feature = random_feature(dim, rng);
  const auto result =
      rofc::enroll("dave", feature, seed_from(rng),
                   random_key(codec.message_bits(), rng), codec, {});

  int accepted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    rofc::DeviceRecord stranger = result.device;
    stranger.seed = seed_from(rng);
    const AuthDecision d = rofc::authenticate(feature, stranger,
                                              result.server);
    if (d.accepted) {
      ++accepted;
    } else {
      REQUIRE(d.failure_reason.has_value());
      CHECK(*d.failure_reason == AuthFailure::kDigestMismatch);
    }
  }
  CHECK(accepted == 0);
}

TEST_CASE("impostor features are rejected") {
  std::mt19937_64 rng(317);
  const std::size_t dim = 128;
  const CodecSpec codec = CodecSpec::fit("ham74+rep3", dim);
  const FeatureVector feature = random_feature(dim, rng);
  const auto result =
      rofc::enroll("erin", feature, seed_from(rng),
                   random_key(codec.message_bits(), rng), codec, {});
  int accepted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const AuthDecision d = rofc::authenticate(random_feature(dim, rng),
                                              result.device, result.server);
    if (d.accepted) ++accepted;
  }
  // Unrelated features share roughly half their template bits; the
  // correction budget cannot bridge that.
  CHECK(accepted == 0);
}

TEST_CASE("reissue invalidates the old pairing both ways") {
  std::mt19937_64 rng(331);
  const std::size_t dim = 32;
  const CodecSpec codec = CodecSpec::fit("rep3", dim);
  const FeatureVector feature = random_feature(dim, rng);

  const auto old_pair =
      rofc::enroll("frank", feature, seed_from(rng),
                   random_key(codec.message_bits(), rng), codec, {});
  const auto new_pair = rofc::revoke_and_reissue(
      "frank", feature, seed_from(rng),
      random_key(codec.message_bits(), rng), codec, {});

  CHECK(rofc::authenticate(feature, new_pair.device, new_pair.server)
            .accepted);
  CHECK_FALSE(
      rofc::authenticate(feature, old_pair.device, new_pair.server).accepted);
  CHECK_FALSE(
      rofc::authenticate(feature, new_pair.device, old_pair.server).accepted);
}

TEST_CASE("dimension mismatches are reported, not thrown") {
  std::mt19937_64 rng(337);
  const std::size_t dim = 32;
  const CodecSpec codec = CodecSpec::fit("rep3", dim);
  const FeatureVector feature = random_feature(dim, rng);
  const auto result =
      rofc::enroll("grace", feature, seed_from(rng),
                   random_key(codec.message_bits(), rng), codec, {});

  const AuthDecision shorter =
      rofc::authenticate(random_feature(dim - 2, rng), result.device,
                         result.server);
  CHECK_FALSE(shorter.accepted);
  CHECK(*shorter.failure_reason == AuthFailure::kDimensionMismatch);

  rofc::ServerRecord bad = result.server;
  bad.truncation_len = bad.dim * bad.quantizer.bits_per_component + 1;
  const AuthDecision overrun = rofc::authenticate(feature, result.device, bad);
  CHECK_FALSE(overrun.accepted);
  CHECK(*overrun.failure_reason == AuthFailure::kDimensionMismatch);
}

TEST_CASE("enrollment validates its inputs") {
  std::mt19937_64 rng(347);
  const CodecSpec codec = CodecSpec::fit("rep3", 32);
  const Seed seed = seed_from(rng);
  CHECK_THROWS_AS(rofc::enroll("henry", random_feature(31, rng), seed,
                               random_key(codec.message_bits(), rng), codec,
                               {}),
                  rofc::DimensionError);
  CHECK_THROWS_AS(rofc::enroll("henry", random_feature(32, rng), seed,
                               BitString(codec.message_bits() + 1), codec,
                               {}),
                  rofc::LengthError);
  // codec.n exceeding dim * bits_per_component cannot enroll.
  CHECK_THROWS_AS(rofc::enroll("henry", random_feature(8, rng), seed,
                               random_key(codec.message_bits(), rng), codec,
                               {}),
                  rofc::LengthError);
}

TEST_CASE("failure reasons have stable names") {
  CHECK(rofc::to_string(AuthFailure::kDecodeFailure) == "decode_failure");
  CHECK(rofc::to_string(AuthFailure::kDigestMismatch) == "digest_mismatch");
  CHECK(rofc::to_string(AuthFailure::kRecordMissing) == "record_missing");
  CHECK(rofc::to_string(AuthFailure::kDimensionMismatch) ==
        "dimension_mismatch");
}

TEST_CASE("wider quantization still round trips") {
  std::mt19937_64 rng(349);
  const std::size_t dim = 32;
  QuantizerSettings settings;
  settings.bits_per_component = 2;
  settings.range_halfwidth = 1.5;
  const CodecSpec codec = CodecSpec::fit("rep3", dim * 2);
  const FeatureVector feature = random_feature(dim, rng);
  const auto result =
      rofc::enroll("iris", feature, seed_from(rng),
                   random_key(codec.message_bits(), rng), codec, settings);
  CHECK(result.server.quantizer == settings);
  CHECK(result.server.truncation_len == codec.codeword_bits());
  const AuthDecision d =
      rofc::authenticate(feature, result.device, result.server);
  CHECK(d.accepted);
  CHECK(*d.corrected_bits == 0);
}
