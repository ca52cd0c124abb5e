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

#include "rofc/ecc.hpp"

#include <charconv>

#include "rofc/errors.hpp"

namespace rofc {

namespace {

void check_odd(unsigned m) {
  if (m == 0 || m % 2 == 0) {
    throw Error("repetition factor must be odd, got " + std::to_string(m));
  }
}

void check_nibbles(std::size_t k) {
  if (k == 0 || k % 4 != 0) {
    throw LengthError("message length must be a positive multiple of 4, got " +
                      std::to_string(k));
  }
}

// Parses "rep<m>" / "ham74" / "ham74+rep<m>". Returns kind and m.
std::pair<CodecKind, unsigned> parse_name(std::string_view name) {
  auto read_m = [&](std::string_view digits) -> unsigned {
    unsigned m = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || m == 0 ||
        m % 2 == 0) {
      throw FormatError("bad repetition factor in codec name \"" +
                        std::string(name) + "\"");
    }
    return m;
  };
  if (name == "ham74") return {CodecKind::kHamming74, 1};
  if (name.starts_with("ham74+rep")) {
    return {CodecKind::kConcat, read_m(name.substr(9))};
  }
  if (name.starts_with("rep")) {
    return {CodecKind::kRepetition, read_m(name.substr(3))};
  }
  throw FormatError("unknown codec name \"" + std::string(name) + "\"");
}

// Hamming(7,4) block d1 d2 d3 d4 p1 p2 p3. Encodes the low nibble of `d`
// (bit 3 = d1 .. bit 0 = d4) to a 7-bit value (bit 6 = d1 .. bit 0 = p3).
std::uint8_t ham74_encode_nibble(std::uint8_t d) {
  const std::uint8_t d1 = (d >> 3) & 1, d2 = (d >> 2) & 1, d3 = (d >> 1) & 1,
                     d4 = d & 1;
  const std::uint8_t p1 = d1 ^ d2 ^ d4;
  const std::uint8_t p2 = d1 ^ d3 ^ d4;
  const std::uint8_t p3 = d2 ^ d3 ^ d4;
  return static_cast<std::uint8_t>((d << 3) | (p1 << 2) | (p2 << 1) | p3);
}

// Syndrome (s1 s2 s3) -> erroneous position 0..6, or -1 for the zero
// syndrome. Positions follow the block layout above.
constexpr int kSyndromePos[8] = {-1, 6, 5, 2, 4, 1, 0, 3};

// Corrects at most one flipped bit in a 7-bit block (bit 6 = d1 .. bit 0 =
// p3) and returns the data nibble.
std::uint8_t ham74_decode_block(std::uint8_t w) {
  const std::uint8_t d1 = (w >> 6) & 1, d2 = (w >> 5) & 1, d3 = (w >> 4) & 1,
                     d4 = (w >> 3) & 1;
  const std::uint8_t p1 = (w >> 2) & 1, p2 = (w >> 1) & 1, p3 = w & 1;
  const std::uint8_t s1 = p1 ^ d1 ^ d2 ^ d4;
  const std::uint8_t s2 = p2 ^ d1 ^ d3 ^ d4;
  const std::uint8_t s3 = p3 ^ d2 ^ d3 ^ d4;
  const int pos = kSyndromePos[(s1 << 2) | (s2 << 1) | s3];
  if (pos >= 0) w ^= static_cast<std::uint8_t>(1u << (6 - pos));
  return (w >> 3) & 0xf;
}

void check_word_length(const CodecSpec &spec, const BitString &word) {
  if (word.size() != spec.codeword_bits()) {
    throw LengthError("word has " + std::to_string(word.size()) +
                      " bits, codec " + spec.name() + " expects " +
                      std::to_string(spec.codeword_bits()));
  }
}

BitString repeat_bits(const BitString &in, unsigned m) {
  BitString out(in.size() * m);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in.bit(i)) {
      for (unsigned r = 0; r < m; ++r) out.set(i * m + r, true);
    }
  }
  return out;
}

BitString majority_groups(const BitString &word, unsigned m) {
  BitString out(word.size() / m);
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned ones = 0;
    for (unsigned r = 0; r < m; ++r) ones += word.bit(i * m + r) ? 1 : 0;
    out.set(i, ones * 2 > m);
  }
  return out;
}

BitString ham74_encode_bits(const BitString &message) {
  BitString out(message.size() / 4 * 7);
  for (std::size_t j = 0; j < message.size() / 4; ++j) {
    std::uint8_t d = 0;
    for (unsigned b = 0; b < 4; ++b) {
      d = static_cast<std::uint8_t>((d << 1) | (message.bit(4 * j + b) ? 1 : 0));
    }
    const std::uint8_t c = ham74_encode_nibble(d);
    for (unsigned b = 0; b < 7; ++b) {
      out.set(7 * j + b, ((c >> (6 - b)) & 1) != 0);
    }
  }
  return out;
}

BitString ham74_decode_bits(const BitString &word) {
  BitString out(word.size() / 7 * 4);
  for (std::size_t j = 0; j < word.size() / 7; ++j) {
    std::uint8_t w = 0;
    for (unsigned b = 0; b < 7; ++b) {
      w = static_cast<std::uint8_t>((w << 1) | (word.bit(7 * j + b) ? 1 : 0));
    }
    const std::uint8_t d = ham74_decode_block(w);
    for (unsigned b = 0; b < 4; ++b) {
      out.set(4 * j + b, ((d >> (3 - b)) & 1) != 0);
    }
  }
  return out;
}

}  // namespace

CodecSpec CodecSpec::repetition(unsigned m, std::size_t message_bits) {
  check_odd(m);
  if (message_bits == 0) throw LengthError("message length must be positive");
  return CodecSpec(CodecKind::kRepetition, m, message_bits, message_bits * m);
}

CodecSpec CodecSpec::hamming74(std::size_t message_bits) {
  check_nibbles(message_bits);
  return CodecSpec(CodecKind::kHamming74, 1, message_bits,
                   message_bits / 4 * 7);
}

CodecSpec CodecSpec::concat(unsigned m, std::size_t message_bits) {
  check_odd(m);
  check_nibbles(message_bits);
  return CodecSpec(CodecKind::kConcat, m, message_bits,
                   message_bits / 4 * 7 * m);
}

CodecSpec CodecSpec::parse(std::string_view name, std::size_t codeword_bits) {
  auto [kind, m] = parse_name(name);
  auto reject = [&] {
    throw FormatError("codeword length " + std::to_string(codeword_bits) +
                      " does not fit codec \"" + std::string(name) + "\"");
  };
  switch (kind) {
    case CodecKind::kRepetition:
      if (codeword_bits == 0 || codeword_bits % m != 0) reject();
      return repetition(m, codeword_bits / m);
    case CodecKind::kHamming74:
      if (codeword_bits == 0 || codeword_bits % 7 != 0) reject();
      return hamming74(codeword_bits / 7 * 4);
    case CodecKind::kConcat:
      if (codeword_bits == 0 || codeword_bits % (7ull * m) != 0) reject();
      return concat(m, codeword_bits / (7ull * m) * 4);
  }
  reject();
  throw FormatError("unreachable");
}

CodecSpec CodecSpec::fit(std::string_view name, std::size_t max_codeword_bits) {
  auto [kind, m] = parse_name(name);
  switch (kind) {
    case CodecKind::kRepetition: {
      const std::size_t k = max_codeword_bits / m;
      if (k == 0) {
        throw LengthError("cannot fit " + std::string(name) + " into " +
                          std::to_string(max_codeword_bits) + " bits");
      }
      return repetition(m, k);
    }
    case CodecKind::kHamming74:
    case CodecKind::kConcat: {
      const std::size_t block = 7ull * m;
      const std::size_t nibbles = max_codeword_bits / block;
      if (nibbles == 0) {
        throw LengthError("cannot fit " + std::string(name) + " into " +
                          std::to_string(max_codeword_bits) + " bits");
      }
      return kind == CodecKind::kHamming74 ? hamming74(nibbles * 4)
                                           : concat(m, nibbles * 4);
    }
  }
  throw FormatError("unreachable");
}

std::string CodecSpec::name() const {
  switch (kind_) {
    case CodecKind::kRepetition:
      return "rep" + std::to_string(m_);
    case CodecKind::kHamming74:
      return "ham74";
    case CodecKind::kConcat:
      return "ham74+rep" + std::to_string(m_);
  }
  return "";
}

BitString encode(const CodecSpec &spec, const BitString &message) {
  if (message.size() != spec.message_bits()) {
    throw LengthError("message has " + std::to_string(message.size()) +
                      " bits, codec " + spec.name() + " expects " +
                      std::to_string(spec.message_bits()));
  }
  switch (spec.kind()) {
    case CodecKind::kRepetition:
      return repeat_bits(message, spec.repetition_factor());
    case CodecKind::kHamming74:
      return ham74_encode_bits(message);
    case CodecKind::kConcat:
      return repeat_bits(ham74_encode_bits(message), spec.repetition_factor());
  }
  throw Error("unreachable");
}

std::optional<DecodeResult> decode(const CodecSpec &spec,
                                   const BitString &word) {
  check_word_length(spec, word);
  DecodeResult result;
  switch (spec.kind()) {
    case CodecKind::kRepetition:
      result.message = majority_groups(word, spec.repetition_factor());
      break;
    case CodecKind::kHamming74:
      result.message = ham74_decode_bits(word);
      break;
    case CodecKind::kConcat:
      result.message = ham74_decode_bits(
          majority_groups(word, spec.repetition_factor()));
      break;
  }
  result.corrected = word.hamming(encode(spec, result.message));
  return result;
}

}  // namespace rofc
