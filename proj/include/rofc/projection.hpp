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

#ifndef ROFC_PROJECTION_HPP_
#define ROFC_PROJECTION_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rofc {

/// Continuous biometric feature vector. Input features are expected in
/// [0,1] per component; projected vectors may leave that range.
using FeatureVector = std::vector<double>;

/// 32-byte device secret. Any 32-byte value is valid; equal seeds derive
/// identical projection parameters.
struct Seed {
  std::array<std::uint8_t, 32> bytes{};

  static Seed from_hex(std::string_view hex);
  static Seed random();
  std::string to_hex() const;

  bool operator==(const Seed &) const = default;
};

/// Parameters of the seed-derived isometry y = Ax + b.
///
/// A is block-diagonal with 2x2 rotation blocks
///   [ cos t  sin t ]
///   [ -sin t cos t ]
/// so only the n rotation angles are stored; the full matrix is never
/// materialized outside diagnostics. b is the translation.
struct ProjectionParams {
  std::vector<double> angles;       // n angles, each in [0, 2*pi)
  std::vector<double> translation;  // 2n components, each in [0, 1)

  std::size_t dim() const { return translation.size(); }
};

/// Derive projection parameters from a seed. Pure function of (seed, dim):
/// the device can always regenerate the transform from its stored secret.
/// dim must be even and >= 2; throws DimensionError otherwise.
ProjectionParams derive_params(const Seed &seed, std::size_t dim);

/// Apply y = Ax + b block-by-block in O(dim) without building A.
/// Throws DimensionError when x.size() != p.dim().
FeatureVector project(const FeatureVector &x, const ProjectionParams &p);

namespace diag {

/// Dense square matrix, row-major. Test and diagnostics support only.
struct Matrix {
  std::size_t dim = 0;
  std::vector<double> data;  // dim * dim, row-major

  double at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

/// Materialize the block-diagonal matrix A of a parameter set.
Matrix materialize_matrix(const ProjectionParams &p);

}  // namespace diag

}  // namespace rofc

#endif  // ROFC_PROJECTION_HPP_
