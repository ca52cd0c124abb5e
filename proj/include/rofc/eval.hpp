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

#ifndef ROFC_EVAL_HPP_
#define ROFC_EVAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rofc/errors.hpp"
#include "rofc/projection.hpp"
#include "rofc/protocol.hpp"

namespace rofc {

/// A labeled multi-sample feature dataset. All vectors share one
/// dimension; per-subject sample counts may vary. At least two subjects
/// are required so impostor trials exist.
struct Dataset {
  struct Subject {
    std::string id;
    std::vector<FeatureVector> samples;

    bool operator==(const Subject &) const = default;
  };

  std::vector<Subject> subjects;
  std::size_t dim = 0;

  bool operator==(const Dataset &) const = default;
};

enum class KnobKind : std::uint8_t {
  kDistanceThreshold,  // accepting direction: decreasing threshold
  kCorrectionRadius,   // accepting direction: increasing radius
};

struct RatePoint {
  double knob = 0;
  double far = 0;  // accepted impostor fraction
  double frr = 0;  // rejected genuine fraction
};

struct RateCurve {
  std::vector<RatePoint> points;  // knobs strictly increasing
  KnobKind knob_kind = KnobKind::kDistanceThreshold;
  std::size_t num_genuine = 0;   // genuine trials behind every point
  std::size_t num_impostor = 0;  // impostor trials behind every point
};

struct EerResult {
  double eer = 0;
  double knob_at_eer = 0;
};

/// Raised when FAR - FRR never changes sign along a curve. Carries the
/// closest pair of rates seen and its knob.
class NoCrossingError : public Error {
 public:
  NoCrossingError(double knob, double far, double frr)
      : Error("FAR/FRR curves do not cross (closest at knob " +
              std::to_string(knob) + ": FAR " + std::to_string(far) +
              ", FRR " + std::to_string(frr) + ")"),
        closest_{knob, far, frr} {}

  const RatePoint &closest() const { return closest_; }

 private:
  RatePoint closest_;
};

/// Seed-deterministic synthetic population: per subject a mean vector
/// uniform in [0,1]^dim, each sample the mean plus centered Gaussian
/// noise of the given sigma, clamped back to [0,1].
Dataset gen_synthetic(std::size_t num_subjects, std::size_t samples_per_subject,
                      std::size_t dim, double sigma, std::uint64_t seed);

/// The fixed 50-point threshold sweep 0.10, 0.11, ..., 0.59.
std::vector<double> threshold_schedule();

/// Unprotected matcher rates. The first sample of each subject is the
/// enrollment; remaining samples are genuine trials and every sample of
/// every other subject is an impostor trial. Match score is
/// 1 - ||a-b|| / sqrt(dim); a trial accepts when score > threshold.
RateCurve baseline_rates(const Dataset &ds,
                         const std::vector<double> &thresholds);

/// Protected pipeline rates swept over the repetition factor m. For each
/// m the codec is the largest of the named family fitting the template,
/// every subject is enrolled with fresh secrets derived from seed, and
/// all genuine and impostor authentications are counted. codec_base is
/// "rep" or "ham74+rep".
RateCurve protected_rates(const Dataset &ds, const std::vector<unsigned> &m_values,
                          const std::string &codec_base,
                          const QuantizerSettings &settings,
                          std::uint64_t seed);

/// Equal error rate by linear interpolation at the first sign change of
/// FAR - FRR. Throws NoCrossingError when no sign change exists.
EerResult compute_eer(const RateCurve &curve);

struct SigmaCalibration {
  double sigma = 0;
  double achieved_eer = 0;
};

/// Search the synthetic noise level whose baseline EER is closest to
/// target_eer on a (num_subjects x samples x dim) population, bisecting on
/// sigma. Deterministic for a fixed seed.
SigmaCalibration calibrate_sigma(std::size_t num_subjects,
                                 std::size_t samples_per_subject,
                                 std::size_t dim, double target_eer,
                                 double tolerance, std::uint64_t seed);

// CSV dataset format: header "subject_id,sample_id,f0,...,f{d-1}",
// UTF-8, decimal floats, one sample per row.

/// Parse and validate a CSV dataset. The dimension is inferred from the
/// first data row and enforced on all rows; violations throw IngestError
/// with the offending line number.
Dataset load_dataset(const std::string &path);

/// Write a dataset in the CSV format. Floats round-trip exactly.
void save_dataset(const Dataset &ds, const std::string &path);

/// Write a curve as CSV "knob,far,frr".
void save_curve(const RateCurve &curve, const std::string &path);

}  // namespace rofc

#endif  // ROFC_EVAL_HPP_
