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

#include "rofc/fuzzy_commitment.hpp"

#include "rofc/errors.hpp"

namespace rofc {

HelperData commit(const BitString &template_bits, const BitString &key,
                  const CodecSpec &codec) {
  if (template_bits.size() != codec.codeword_bits()) {
    throw LengthError("template has " + std::to_string(template_bits.size()) +
                      " bits, codec " + codec.name() + " expects " +
                      std::to_string(codec.codeword_bits()));
  }
  HelperData hd;
  hd.hd_bits = encode(codec, key) ^ template_bits;
  hd.codec = codec.name();
  hd.key_digest = digest_bits(key);
  return hd;
}

std::optional<BitString> recover(const BitString &query, const HelperData &hd) {
  if (query.size() != hd.hd_bits.size()) {
    throw LengthError("query has " + std::to_string(query.size()) +
                      " bits, helper data has " +
                      std::to_string(hd.hd_bits.size()));
  }
  const CodecSpec codec = CodecSpec::parse(hd.codec, hd.hd_bits.size());
  auto decoded = decode(codec, hd.hd_bits ^ query);
  if (!decoded) return std::nullopt;
  return std::move(decoded->message);
}

bool verify(const BitString &candidate, const HelperData &hd) {
  const Digest d = digest_bits(candidate);
  return constant_time_equal(d, hd.key_digest);
}

}  // namespace rofc
