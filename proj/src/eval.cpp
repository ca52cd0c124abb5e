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

#include "rofc/eval.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rofc/digest.hpp"
#include "rofc/rng.hpp"

namespace rofc {

namespace {

std::string subject_label(std::size_t index) {
  std::string digits = std::to_string(index);
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  return "s" + digits;
}

double match_score(const FeatureVector &a, const FeatureVector &b) {
  double sq = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sq += d * d;
  }
  return 1.0 - std::sqrt(sq / static_cast<double>(a.size()));
}

void check_trial_counts(const Dataset &ds, std::size_t num_genuine,
                        std::size_t num_impostor) {
  if (num_genuine == 0) {
    throw Error("dataset yields no genuine trials (every subject has a "
                "single sample)");
  }
  if (num_impostor == 0) {
    throw Error("dataset yields no impostor trials (need at least two "
                "subjects)");
  }
  for (const auto &subject : ds.subjects) {
    if (subject.samples.empty()) {
      throw Error("subject " + subject.id + " has no samples");
    }
  }
}

// Deterministic per-(m, subject) secret material for the protected sweep.
// Each pair gets an independent 32-byte key, order-independent in m and
// subject index.
std::array<std::uint8_t, 32> pair_secret(const Digest &master, unsigned m,
                                         std::size_t subject_index) {
  std::vector<std::uint8_t> buf(master.begin(), master.end());
  for (int i = 0; i < 4; ++i) {
    buf.push_back(static_cast<std::uint8_t>(m >> (8 * i)));
  }
  auto idx = static_cast<std::uint64_t>(subject_index);
  for (int i = 0; i < 8; ++i) {
    buf.push_back(static_cast<std::uint8_t>(idx >> (8 * i)));
  }
  return sha256(buf);
}

}  // namespace

Dataset gen_synthetic(std::size_t num_subjects, std::size_t samples_per_subject,
                      std::size_t dim, double sigma, std::uint64_t seed) {
  if (num_subjects == 0 || samples_per_subject == 0 || dim == 0) {
    throw Error("population shape must be positive in every dimension");
  }
  if (dim % 2 != 0) {
    throw Error("feature dimension must be even, got " + std::to_string(dim));
  }
  if (!(sigma >= 0.0)) {
    throw Error("sigma must be non-negative, got " + std::to_string(sigma));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> standard_normal(0.0, 1.0);

  Dataset ds;
  ds.dim = dim;
  ds.subjects.resize(num_subjects);
  for (std::size_t s = 0; s < num_subjects; ++s) {
    auto &subject = ds.subjects[s];
    subject.id = subject_label(s);
    FeatureVector mean(dim);
    for (auto &v : mean) v = uniform(rng);
    subject.samples.reserve(samples_per_subject);
    for (std::size_t j = 0; j < samples_per_subject; ++j) {
      FeatureVector sample(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        // Scale a standard draw so the engine stream is identical across
        // sigma values: the same seed compares populations that differ
        // only in noise level.
        const double noisy = mean[i] + sigma * standard_normal(rng);
        sample[i] = std::clamp(noisy, 0.0, 1.0);
      }
      subject.samples.push_back(std::move(sample));
    }
  }
  return ds;
}

std::vector<double> threshold_schedule() {
  std::vector<double> out(50);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<double>(10 + i) / 100.0;
  }
  return out;
}

RateCurve baseline_rates(const Dataset &ds,
                         const std::vector<double> &thresholds) {
  if (thresholds.empty()) throw Error("threshold sweep is empty");
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > thresholds[i - 1])) {
      throw Error("thresholds must be strictly increasing");
    }
  }
  for (const auto &subject : ds.subjects) {
    for (const auto &sample : subject.samples) {
      if (sample.size() != ds.dim) {
        throw DimensionError("sample of subject " + subject.id +
                             " has dimension " +
                             std::to_string(sample.size()) + ", dataset says " +
                             std::to_string(ds.dim));
      }
    }
  }

  std::vector<double> genuine_scores;
  std::vector<double> impostor_scores;
  for (std::size_t t = 0; t < ds.subjects.size(); ++t) {
    const auto &target = ds.subjects[t];
    if (target.samples.empty()) {
      throw Error("subject " + target.id + " has no samples");
    }
    const FeatureVector &enrolled = target.samples.front();
    for (std::size_t j = 1; j < target.samples.size(); ++j) {
      genuine_scores.push_back(match_score(enrolled, target.samples[j]));
    }
    for (std::size_t o = 0; o < ds.subjects.size(); ++o) {
      if (o == t) continue;
      for (const auto &sample : ds.subjects[o].samples) {
        impostor_scores.push_back(match_score(enrolled, sample));
      }
    }
  }
  check_trial_counts(ds, genuine_scores.size(), impostor_scores.size());

  RateCurve curve;
  curve.knob_kind = KnobKind::kDistanceThreshold;
  curve.num_genuine = genuine_scores.size();
  curve.num_impostor = impostor_scores.size();
  curve.points.reserve(thresholds.size());
  for (double t : thresholds) {
    std::size_t genuine_accepts = 0;
    for (double s : genuine_scores) genuine_accepts += s > t ? 1 : 0;
    std::size_t impostor_accepts = 0;
    for (double s : impostor_scores) impostor_accepts += s > t ? 1 : 0;
    RatePoint p;
    p.knob = t;
    p.far = static_cast<double>(impostor_accepts) /
            static_cast<double>(impostor_scores.size());
    p.frr = 1.0 - static_cast<double>(genuine_accepts) /
                      static_cast<double>(genuine_scores.size());
    curve.points.push_back(p);
  }
  return curve;
}

RateCurve protected_rates(const Dataset &ds,
                          const std::vector<unsigned> &m_values,
                          const std::string &codec_base,
                          const QuantizerSettings &settings,
                          std::uint64_t seed) {
  if (m_values.empty()) throw Error("repetition sweep is empty");
  for (std::size_t i = 1; i < m_values.size(); ++i) {
    if (m_values[i] <= m_values[i - 1]) {
      throw Error("repetition factors must be strictly increasing");
    }
  }
  if (codec_base != "rep" && codec_base != "ham74+rep") {
    throw Error("codec family must be \"rep\" or \"ham74+rep\", got \"" +
                codec_base + "\"");
  }

  std::size_t num_genuine = 0;
  std::size_t num_impostor = 0;
  for (const auto &subject : ds.subjects) {
    num_genuine += subject.samples.empty() ? 0 : subject.samples.size() - 1;
  }
  for (const auto &subject : ds.subjects) {
    num_impostor +=
        (ds.subjects.size() - 1) == 0 ? 0 : subject.samples.size();
  }
  num_impostor *= ds.subjects.size() - 1;
  check_trial_counts(ds, num_genuine, num_impostor);

  std::vector<std::uint8_t> seed_bytes(8);
  for (int i = 0; i < 8; ++i) {
    seed_bytes[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  }
  const Digest master = sha256(seed_bytes);
  const std::size_t template_bits =
      ds.dim * settings.bits_per_component;

  RateCurve curve;
  curve.knob_kind = KnobKind::kCorrectionRadius;
  curve.num_genuine = num_genuine;
  curve.num_impostor = num_impostor;
  curve.points.reserve(m_values.size());

  for (unsigned m : m_values) {
    const CodecSpec codec =
        CodecSpec::fit(codec_base + std::to_string(m), template_bits);

    std::vector<EnrollmentResult> enrolled;
    enrolled.reserve(ds.subjects.size());
    for (std::size_t s = 0; s < ds.subjects.size(); ++s) {
      const auto &subject = ds.subjects[s];
      const auto secret = pair_secret(master, m, s);
      Seed device_seed;
      SeedStream seed_stream(secret, "eval.seed");
      seed_stream.fill(device_seed.bytes);
      SeedStream key_stream(secret, "eval.key");
      const BitString key =
          BitString::random(codec.message_bits(), key_stream);
      enrolled.push_back(enroll(subject.id, subject.samples.front(),
                                device_seed, key, codec, settings));
    }

    std::size_t genuine_accepts = 0;
    std::size_t impostor_accepts = 0;
    for (std::size_t t = 0; t < ds.subjects.size(); ++t) {
      const auto &target = ds.subjects[t];
      for (std::size_t j = 1; j < target.samples.size(); ++j) {
        if (authenticate(target.samples[j], enrolled[t].device,
                         enrolled[t].server)
                .accepted) {
          ++genuine_accepts;
        }
      }
      for (std::size_t o = 0; o < ds.subjects.size(); ++o) {
        if (o == t) continue;
        for (const auto &sample : ds.subjects[o].samples) {
          if (authenticate(sample, enrolled[t].device, enrolled[t].server)
                  .accepted) {
            ++impostor_accepts;
          }
        }
      }
    }

    RatePoint p;
    p.knob = static_cast<double>(m);
    p.far = static_cast<double>(impostor_accepts) /
            static_cast<double>(num_impostor);
    p.frr = 1.0 - static_cast<double>(genuine_accepts) /
                      static_cast<double>(num_genuine);
    curve.points.push_back(p);
  }
  return curve;
}

EerResult compute_eer(const RateCurve &curve) {
  const auto &pts = curve.points;
  if (pts.empty()) throw Error("curve has no points");

  auto diff = [](const RatePoint &p) { return p.far - p.frr; };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (diff(pts[i]) == 0.0) {
      return {pts[i].far, pts[i].knob};
    }
    if (i + 1 < pts.size() && diff(pts[i]) * diff(pts[i + 1]) < 0.0) {
      const double d0 = diff(pts[i]);
      const double d1 = diff(pts[i + 1]);
      const double alpha = d0 / (d0 - d1);
      EerResult r;
      r.knob_at_eer =
          pts[i].knob + alpha * (pts[i + 1].knob - pts[i].knob);
      r.eer = pts[i].far + alpha * (pts[i + 1].far - pts[i].far);
      return r;
    }
  }

  const auto closest = std::min_element(
      pts.begin(), pts.end(), [&](const RatePoint &a, const RatePoint &b) {
        return std::abs(diff(a)) < std::abs(diff(b));
      });
  throw NoCrossingError(closest->knob, closest->far, closest->frr);
}

SigmaCalibration calibrate_sigma(std::size_t num_subjects,
                                 std::size_t samples_per_subject,
                                 std::size_t dim, double target_eer,
                                 double tolerance, std::uint64_t seed) {
  if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
  if (!(target_eer > 0.0 && target_eer < 0.5)) {
    throw Error("target EER must lie in (0, 0.5)");
  }
  const auto thresholds = threshold_schedule();

  // A curve whose rates never cross is off the sweep: all-positive
  // FAR - FRR means the noise is too low, all-negative too high.
  auto eer_at = [&](double sigma) {
    const Dataset ds =
        gen_synthetic(num_subjects, samples_per_subject, dim, sigma, seed);
    const RateCurve curve = baseline_rates(ds, thresholds);
    try {
      return compute_eer(curve).eer;
    } catch (const NoCrossingError &) {
      const RatePoint &last = curve.points.back();
      return last.far - last.frr > 0.0 ? 0.0 : 1.0;
    }
  };

  double lo = 0.0;
  double hi = 2.0;
  SigmaCalibration best{lo, eer_at(lo)};
  auto consider = [&](double sigma, double eer) {
    if (std::abs(eer - target_eer) <
        std::abs(best.achieved_eer - target_eer)) {
      best = {sigma, eer};
    }
  };
  consider(hi, eer_at(hi));

  for (int iter = 0; iter < 48; ++iter) {
    const double mid = (lo + hi) / 2.0;
    const double eer = eer_at(mid);
    consider(mid, eer);
    if (std::abs(best.achieved_eer - target_eer) <= tolerance) return best;
    if (eer < target_eer) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (std::abs(best.achieved_eer - target_eer) <= tolerance) return best;
  throw Error("sigma search did not reach the target rate (closest " +
              std::to_string(best.achieved_eer) + " at sigma " +
              std::to_string(best.sigma) + ")");
}

}  // namespace rofc
