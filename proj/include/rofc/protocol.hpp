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

#ifndef ROFC_PROTOCOL_HPP_
#define ROFC_PROTOCOL_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "rofc/bitstring.hpp"
#include "rofc/ecc.hpp"
#include "rofc/fuzzy_commitment.hpp"
#include "rofc/projection.hpp"
#include "rofc/quantizer.hpp"

namespace rofc {

/// What the user's device keeps: the projection secret, nothing else.
/// The seed never appears in any server record.
struct DeviceRecord {
  std::string user_id;
  Seed seed;
  std::int64_t created_at = 0;  // seconds since epoch

  bool operator==(const DeviceRecord &) const = default;
};

/// Quantizer settings that are public protocol parameters. The per-slot
/// reference thresholds are not here: they derive from the device seed.
struct QuantizerSettings {
  unsigned bits_per_component = 1;
  double range_halfwidth = 1.0;

  bool operator==(const QuantizerSettings &) const = default;
};

/// What the server keeps: helper data plus public parameters. Contains
/// no key, no seed, and no template, raw or cancelable.
struct ServerRecord {
  std::string user_id;
  HelperData helper;
  std::uint32_t dim = 0;
  QuantizerSettings quantizer;
  std::uint32_t truncation_len = 0;  // bits of the template actually used
  std::uint8_t version = 1;
  bool revoked = false;

  bool operator==(const ServerRecord &) const = default;
};

enum class AuthFailure : std::uint8_t {
  kDecodeFailure,
  kDigestMismatch,
  kRecordMissing,
  kDimensionMismatch,
};

std::string to_string(AuthFailure f);

/// Outcome of an authentication attempt. accepted == true implies
/// failure_reason is absent. Failures at this boundary are reported here,
/// never thrown.
struct AuthDecision {
  bool accepted = false;
  std::optional<std::size_t> corrected_bits;
  std::optional<AuthFailure> failure_reason;
};

struct EnrollmentResult {
  DeviceRecord device;
  ServerRecord server;
};

/// Enrollment pipeline: center the feature by -0.5, project under
/// parameters derived from seed, binarize against the derived reference,
/// truncate to the codec's codeword length, and commit the key.
///
/// feature must have an even dimension, key must have codec.k bits, and
/// codec.n must fit within dim * bits_per_component; violations throw
/// DimensionError / LengthError.
EnrollmentResult enroll(const std::string &user_id,
                        const FeatureVector &feature, const Seed &seed,
                        const BitString &key, const CodecSpec &codec,
                        const QuantizerSettings &settings);

/// Recompute the query's template through the identical pipeline, recover
/// a key candidate and check its digest. Pure given the two records;
/// repeated calls are independent.
AuthDecision authenticate(const FeatureVector &query, const DeviceRecord &dev,
                          const ServerRecord &srv);

/// Enroll with fresh secrets. Identical to enroll; the distinct name marks
/// intent. The caller retires the superseded server record (see
/// RecordStore::supersede), keeping it flagged rather than deleted.
EnrollmentResult revoke_and_reissue(const std::string &user_id,
                                    const FeatureVector &feature,
                                    const Seed &new_seed,
                                    const BitString &new_key,
                                    const CodecSpec &codec,
                                    const QuantizerSettings &settings);

}  // namespace rofc

#endif  // ROFC_PROTOCOL_HPP_
