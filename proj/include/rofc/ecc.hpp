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

#ifndef ROFC_ECC_HPP_
#define ROFC_ECC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "rofc/bitstring.hpp"

namespace rofc {

enum class CodecKind {
  kRepetition,  // each message bit repeated m times contiguously
  kHamming74,   // one 7-bit block per 4 message bits, corrects 1 per block
  kConcat,      // Hamming(7,4) outer, then each coded bit repeated m times
};

/// Geometry and identity of a binary error-correcting code.
///
/// Bit layouts are fixed so helper data is portable:
///  - repetition(m): message bit i occupies codeword positions
///    i*m .. i*m + m - 1. Majority decoding; m must be odd so votes
///    cannot tie.
///  - hamming74: message nibble j (bits 4j..4j+3 = d1 d2 d3 d4) maps to
///    codeword block 7j..7j+6 laid out as d1 d2 d3 d4 p1 p2 p3 with
///      p1 = d1^d2^d4, p2 = d1^d3^d4, p3 = d2^d3^d4.
///    Syndrome decoding; a perfect code, so every 7-bit word decodes.
///  - ham74+rep(m): encode with hamming74 first, then repeat each coded
///    bit m times contiguously. Decode inner by majority, then outer.
///
/// Canonical names: "rep3", "ham74", "ham74+rep5".
class CodecSpec {
 public:
  static CodecSpec repetition(unsigned m, std::size_t message_bits);
  static CodecSpec hamming74(std::size_t message_bits);
  static CodecSpec concat(unsigned m, std::size_t message_bits);

  /// Rebuild a spec from its canonical name and a known codeword length
  /// (as found in stored helper data). Throws FormatError when the name
  /// is unknown or the length does not fit the named family.
  static CodecSpec parse(std::string_view name, std::size_t codeword_bits);

  /// Largest spec of the named family whose codeword fits max_codeword_bits.
  /// For "ham74"/"ham74+repM" the message length is the largest multiple
  /// of 4 that fits; for "repM" it is the largest integer.
  /// Throws LengthError when not even the smallest message fits.
  static CodecSpec fit(std::string_view name, std::size_t max_codeword_bits);

  CodecKind kind() const { return kind_; }
  std::size_t message_bits() const { return k_; }   // k
  std::size_t codeword_bits() const { return n_; }  // n
  unsigned repetition_factor() const { return m_; }  // 1 for plain ham74
  std::string name() const;

  /// Guaranteed correction budget per repetition group: floor((m-1)/2).
  unsigned inner_radius() const { return (m_ - 1) / 2; }

  bool operator==(const CodecSpec &) const = default;

 private:
  CodecSpec(CodecKind kind, unsigned m, std::size_t k, std::size_t n)
      : kind_(kind), m_(m), k_(k), n_(n) {}

  CodecKind kind_;
  unsigned m_;
  std::size_t k_;
  std::size_t n_;
};

struct DecodeResult {
  BitString message;
  /// Bits of the word that disagree with the re-encoded message.
  /// Diagnostic only; accept/reject is decided elsewhere.
  std::size_t corrected = 0;
};

/// Deterministic injective encoding. message must have spec.message_bits()
/// bits; throws LengthError otherwise.
BitString encode(const CodecSpec &spec, const BitString &message);

/// Decode a word of spec.codeword_bits() bits. Words within the per-block
/// budget of a codeword decode to that codeword's message. Returns nullopt
/// only for constructions that can detect but not correct; the codecs here
/// always return a message (odd-m majority and a perfect Hamming code).
std::optional<DecodeResult> decode(const CodecSpec &spec,
                                   const BitString &word);

}  // namespace rofc

#endif  // ROFC_ECC_HPP_
