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

#ifndef ROFC_FUZZY_COMMITMENT_HPP_
#define ROFC_FUZZY_COMMITMENT_HPP_

#include <optional>
#include <string>

#include "rofc/bitstring.hpp"
#include "rofc/digest.hpp"
#include "rofc/ecc.hpp"

namespace rofc {

/// Public record binding a key to a binary template.
///
/// hd_bits = encode(key) XOR template. Neither the key nor the template
/// is recoverable from the pair (hd_bits, key_digest) alone; a query
/// close enough to the template recovers the key through the codec.
struct HelperData {
  BitString hd_bits;       // length = codec n
  std::string codec;       // canonical codec name, e.g. "ham74+rep3"
  Digest key_digest{};     // SHA-256 of the key bits

  bool operator==(const HelperData &) const = default;
};

/// Bind key to template. template_bits must have codec.n bits and key
/// codec.k bits; throws LengthError otherwise.
HelperData commit(const BitString &template_bits, const BitString &key,
                  const CodecSpec &codec);

/// Recover a key candidate from a noisy query. The candidate is returned
/// whether or not it is the enrolled key; verification is a separate step.
/// nullopt signals an uncorrectable decode.
std::optional<BitString> recover(const BitString &query, const HelperData &hd);

/// True iff the candidate's digest matches the committed digest,
/// compared in constant time.
bool verify(const BitString &candidate, const HelperData &hd);

}  // namespace rofc

#endif  // ROFC_FUZZY_COMMITMENT_HPP_
