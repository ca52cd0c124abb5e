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

#ifndef ROFC_QUANTIZER_HPP_
#define ROFC_QUANTIZER_HPP_

#include <vector>

#include "rofc/bitstring.hpp"
#include "rofc/projection.hpp"

namespace rofc {

/// Settings for turning a projected vector into bits.
///
/// With bits_per_component == 1 each component contributes its sign bit
/// relative to the reference threshold. With q > 1, the offset from the
/// reference is clamped to [-range_halfwidth, +range_halfwidth], bucketed
/// uniformly into 2^q levels and emitted as a q-bit Gray code (MSB first),
/// so one analog boundary crossing costs one bit.
struct QuantizerConfig {
  unsigned bits_per_component = 1;
  std::vector<double> reference;  // per-component threshold, length = dim
  double range_halfwidth = 1.0;   // used only when bits_per_component > 1
};

/// Quantize y into dim * bits_per_component bits.
/// Ties (y_i == reference_i) quantize toward the upper bucket.
/// Throws DimensionError when y.size() != cfg.reference.size().
BitString binarize(const FeatureVector &y, const QuantizerConfig &cfg);

/// Default threshold vector: the translation b of the parameter set,
/// so each sign bit reflects the sign of the rotated component (Ax)_i.
/// Callers should center features (subtract 0.5) before projecting so
/// those signs come out roughly balanced.
std::vector<double> default_reference(const ProjectionParams &p);

}  // namespace rofc

#endif  // ROFC_QUANTIZER_HPP_
