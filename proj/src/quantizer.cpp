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

#include "rofc/quantizer.hpp"

#include <algorithm>
#include <cmath>

#include "rofc/errors.hpp"

namespace rofc {

namespace {

// Gray code of a bucket index, MSB first across q bits.
std::uint32_t to_gray(std::uint32_t v) { return v ^ (v >> 1); }

}  // namespace

BitString binarize(const FeatureVector &y, const QuantizerConfig &config) {
  const unsigned q = config.bits_per_component;
  if (q == 0 || q > 8) {
    throw Error("bits per component must be in [1, 8], got " +
                std::to_string(q));
  }
  if (config.reference.size() != y.size()) {
    throw DimensionError("reference length " +
                         std::to_string(config.reference.size()) +
                         " does not match feature length " +
                         std::to_string(y.size()));
  }
  BitString bits(y.size() * q);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double v = y[i] - config.reference[i];
    if (q == 1) {
      // Sign bit; a value exactly on the reference goes to the upper bucket.
      bits.set(i, v >= 0.0);
      continue;
    }
    const double r = config.range_halfwidth;
    const std::uint32_t buckets = 1u << q;
    // Clamp to [-r, r), then split into 2^q uniform buckets.
    double clamped = std::clamp(v, -r, r);
    auto idx = static_cast<std::uint32_t>((clamped + r) / (2.0 * r) * buckets);
    if (idx >= buckets) idx = buckets - 1;
    const std::uint32_t code = to_gray(idx);
    for (unsigned b = 0; b < q; ++b) {
      bits.set(i * q + b, ((code >> (q - 1 - b)) & 1u) != 0);
    }
  }
  return bits;
}

FeatureVector default_reference(const ProjectionParams &params) {
  return params.translation;
}

}  // namespace rofc
