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

#include <ctime>

#include "rofc/errors.hpp"

namespace rofc {

namespace {

// Shared enrollment/authentication front end: center, project, binarize,
// truncate. Features are expected in [0, 1] per component.
BitString pipeline_bits(const FeatureVector &feature, const Seed &seed,
                        const QuantizerSettings &settings,
                        std::size_t truncation_len) {
  FeatureVector centered(feature.size());
  for (std::size_t i = 0; i < feature.size(); ++i) {
    centered[i] = feature[i] - 0.5;
  }
  const ProjectionParams params = derive_params(seed, feature.size());
  const FeatureVector projected = project(centered, params);
  QuantizerConfig config;
  config.bits_per_component = settings.bits_per_component;
  config.reference = default_reference(params);
  config.range_halfwidth = settings.range_halfwidth;
  const BitString full = binarize(projected, config);
  if (truncation_len > full.size()) {
    throw LengthError("requested " + std::to_string(truncation_len) +
                      " template bits but the quantizer yields only " +
                      std::to_string(full.size()));
  }
  return full.prefix(truncation_len);
}

}  // namespace

std::string to_string(AuthFailure f) {
  switch (f) {
    case AuthFailure::kDecodeFailure:
      return "decode_failure";
    case AuthFailure::kDigestMismatch:
      return "digest_mismatch";
    case AuthFailure::kRecordMissing:
      return "record_missing";
    case AuthFailure::kDimensionMismatch:
      return "dimension_mismatch";
  }
  return "unknown";
}

EnrollmentResult enroll(const std::string &user_id,
                        const FeatureVector &feature, const Seed &seed,
                        const BitString &key, const CodecSpec &codec,
                        const QuantizerSettings &settings) {
  const BitString template_bits =
      pipeline_bits(feature, seed, settings, codec.codeword_bits());

  EnrollmentResult result;
  result.device.user_id = user_id;
  result.device.seed = seed;
  result.device.created_at = static_cast<std::int64_t>(std::time(nullptr));

  result.server.user_id = user_id;
  result.server.helper = commit(template_bits, key, codec);
  result.server.dim = static_cast<std::uint32_t>(feature.size());
  result.server.quantizer = settings;
  result.server.truncation_len =
      static_cast<std::uint32_t>(codec.codeword_bits());
  result.server.version = 1;
  result.server.revoked = false;
  return result;
}

AuthDecision authenticate(const FeatureVector &query, const DeviceRecord &dev,
                          const ServerRecord &srv) {
  AuthDecision decision;
  auto fail = [&decision](AuthFailure reason) {
    decision.accepted = false;
    decision.failure_reason = reason;
    return decision;
  };

  if (query.size() != srv.dim || srv.dim == 0 || srv.dim % 2 != 0) {
    return fail(AuthFailure::kDimensionMismatch);
  }
  if (srv.truncation_len != srv.helper.hd_bits.size() ||
      srv.truncation_len >
          static_cast<std::uint64_t>(srv.dim) *
              srv.quantizer.bits_per_component) {
    return fail(AuthFailure::kDimensionMismatch);
  }

  try {
    const BitString query_bits =
        pipeline_bits(query, dev.seed, srv.quantizer, srv.truncation_len);
    const CodecSpec codec =
        CodecSpec::parse(srv.helper.codec, srv.helper.hd_bits.size());
    auto decoded = decode(codec, srv.helper.hd_bits ^ query_bits);
    if (!decoded) return fail(AuthFailure::kDecodeFailure);
    decision.corrected_bits = decoded->corrected;
    if (!verify(decoded->message, srv.helper)) {
      return fail(AuthFailure::kDigestMismatch);
    }
    decision.accepted = true;
    return decision;
  } catch (const Error &) {
    // Malformed stored parameters (bad codec name, impossible lengths).
    return fail(AuthFailure::kDecodeFailure);
  }
}

EnrollmentResult revoke_and_reissue(const std::string &user_id,
                                    const FeatureVector &feature,
                                    const Seed &new_seed,
                                    const BitString &new_key,
                                    const CodecSpec &codec,
                                    const QuantizerSettings &settings) {
  return enroll(user_id, feature, new_seed, new_key, codec, settings);
}

}  // namespace rofc
