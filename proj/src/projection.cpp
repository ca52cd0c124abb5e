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

#include "rofc/projection.hpp"

#include <cmath>
#include <numbers>

#include "rofc/errors.hpp"
#include "rofc/rng.hpp"

namespace rofc {

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

Seed Seed::from_hex(std::string_view hex) {
  if (hex.size() != 64) {
    throw FormatError("seed hex must be 64 characters, got " +
                      std::to_string(hex.size()));
  }
  Seed s;
  for (std::size_t i = 0; i < 32; ++i) {
    int hi = hex_nibble(hex[2 * i]);
    int lo = hex_nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw FormatError("seed hex contains a non-hex character");
    }
    s.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return s;
}

Seed Seed::random() {
  Seed s;
  secure_random_bytes(s.bytes);
  return s;
}

std::string Seed::to_hex() const {
  std::string out;
  out.reserve(64);
  for (std::uint8_t b : bytes) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0xf]);
  }
  return out;
}

ProjectionParams derive_params(const Seed &seed, std::size_t dim) {
  if (dim == 0 || dim % 2 != 0) {
    throw DimensionError("projection dimension must be even and positive, got " +
                         std::to_string(dim));
  }
  SeedStream stream(seed.bytes, "rop.params");
  ProjectionParams params;
  params.angles.resize(dim / 2);
  params.translation.resize(dim);
  // Angles first, then the translation, so either length alone never
  // perturbs the other's values for a fixed seed.
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (auto &theta : params.angles) theta = stream.next_unit() * kTwoPi;
  for (auto &t : params.translation) t = stream.next_unit();
  return params;
}

FeatureVector project(const FeatureVector &x, const ProjectionParams &params) {
  const std::size_t dim = params.dim();
  if (x.size() != dim) {
    throw DimensionError("feature length " + std::to_string(x.size()) +
                         " does not match projection dimension " +
                         std::to_string(dim));
  }
  FeatureVector y(dim);
  for (std::size_t blk = 0; blk < dim / 2; ++blk) {
    const double c = std::cos(params.angles[blk]);
    const double s = std::sin(params.angles[blk]);
    const double x0 = x[2 * blk];
    const double x1 = x[2 * blk + 1];
    y[2 * blk] = c * x0 + s * x1 + params.translation[2 * blk];
    y[2 * blk + 1] = -s * x0 + c * x1 + params.translation[2 * blk + 1];
  }
  return y;
}

namespace diag {

Matrix materialize_matrix(const ProjectionParams &params) {
  const std::size_t dim = params.dim();
  Matrix m;
  m.dim = dim;
  m.data.assign(dim * dim, 0.0);
  for (std::size_t blk = 0; blk < dim / 2; ++blk) {
    const double c = std::cos(params.angles[blk]);
    const double s = std::sin(params.angles[blk]);
    const std::size_t r = 2 * blk;
    m.data[r * dim + r] = c;
    m.data[r * dim + r + 1] = s;
    m.data[(r + 1) * dim + r] = -s;
    m.data[(r + 1) * dim + r + 1] = c;
  }
  return m;
}

}  // namespace diag

}  // namespace rofc
