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

// Exit codes: 0 success/accepted, 1 rejected (auth only), 2 usage error,
// 3 data/format error, 4 internal error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rofc/errors.hpp"
#include "rofc/eval.hpp"
#include "rofc/record_store.hpp"
#include "rofc/rng.hpp"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitInternal = 4;

struct EnrollArgs {
  std::string user;
  std::string feature_file;
  std::string device_store;
  std::string server_store;
  std::string codec = "ham74+rep3";
  unsigned bits_per_component = 1;
  std::string seed_hex;
  bool unsafe_debug = false;
};

struct AuthArgs {
  std::string user;
  std::string feature_file;
  std::string device_store;
  std::string server_store;
};

struct SynthArgs {
  std::size_t subjects = 0;
  std::size_t samples = 0;
  std::size_t dim = 0;
  double sigma = 0.05;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
};

struct EvalArgs {
  std::string dataset;
  std::string mode = "both";
  std::string m_list = "1,3,5,7,9,11,13,15,17,19,21,23,25,27";
  std::string out_prefix;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

std::uint64_t random_u64() {
  std::uint8_t raw[8];
  rofc::secure_random_bytes(raw);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | raw[i];
  return v;
}

rofc::FeatureVector load_single_sample(const std::string &path) {
  if (!std::filesystem::exists(path)) {
    throw rofc::FormatError("feature file not found: " + path);
  }
  rofc::Dataset ds = rofc::load_dataset(path);
  if (ds.subjects.size() != 1 || ds.subjects.front().samples.size() != 1) {
    throw rofc::FormatError("feature file must hold exactly one sample row: " +
                            path);
  }
  return ds.subjects.front().samples.front();
}

rofc::RecordStore load_store_or_empty(const std::string &path) {
  if (!std::filesystem::exists(path)) return {};
  return rofc::store_load(path);
}

rofc::RecordStore load_store_required(const std::string &path) {
  if (!std::filesystem::exists(path)) {
    throw rofc::FormatError("store file not found: " + path);
  }
  return rofc::store_load(path);
}

std::vector<unsigned> parse_m_list(const std::string &text) {
  std::vector<unsigned> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = comma == std::string::npos
                                 ? text.substr(start)
                                 : text.substr(start, comma - start);
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v == 0 || v % 2 == 0) {
        throw std::invalid_argument("non-odd");
      }
      values.push_back(static_cast<unsigned>(v));
    } catch (const std::exception &) {
      throw CLI::ValidationError("--m-list",
                                 "entries must be odd positive integers");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) {
      throw CLI::ValidationError("--m-list", "entries must strictly increase");
    }
  }
  if (values.empty()) {
    throw CLI::ValidationError("--m-list", "needs at least one entry");
  }
  return values;
}

int cmd_enroll(const EnrollArgs &args) {
  try {
    (void)rofc::CodecSpec::fit(args.codec, 1u << 20);
  } catch (const rofc::Error &) {
    throw CLI::ValidationError("--codec", "unknown codec name \"" +
                                              args.codec + "\"");
  }
  if (!args.seed_hex.empty()) {
    try {
      (void)rofc::Seed::from_hex(args.seed_hex);
    } catch (const rofc::Error &) {
      throw CLI::ValidationError("--seed-hex", "must be 64 hex characters");
    }
  }

  const rofc::FeatureVector feature = load_single_sample(args.feature_file);
  const std::size_t template_bits = feature.size() * args.bits_per_component;
  const rofc::CodecSpec codec = rofc::CodecSpec::fit(args.codec, template_bits);

  rofc::Seed device_seed;
  rofc::BitString key;
  if (!args.seed_hex.empty()) {
    // Reproducibility mode: both secrets derive from the one hex seed,
    // domain-separated, so reruns produce identical server records.
    const rofc::Seed master = rofc::Seed::from_hex(args.seed_hex);
    rofc::SeedStream seed_stream(master.bytes, "enroll.seed");
    seed_stream.fill(device_seed.bytes);
    rofc::SeedStream key_stream(master.bytes, "enroll.key");
    key = rofc::BitString::random(codec.message_bits(), key_stream);
  } else {
    device_seed = rofc::Seed::random();
    key = rofc::BitString::random(codec.message_bits());
  }

  rofc::QuantizerSettings settings;
  settings.bits_per_component = args.bits_per_component;

  rofc::RecordStore devices = load_store_or_empty(args.device_store);
  rofc::RecordStore servers = load_store_or_empty(args.server_store);
  const std::size_t superseded = servers.supersede(args.user);

  const rofc::EnrollmentResult result = rofc::enroll(
      args.user, feature, device_seed, key, codec, settings);
  devices.devices.push_back(result.device);
  servers.servers.push_back(result.server);
  rofc::store_save(devices, args.device_store);
  rofc::store_save(servers, args.server_store);

  std::cout << "enrolled " << args.user << ": codec=" << codec.name()
            << " truncation_len=" << result.server.truncation_len
            << " record_version=" << int(result.server.version) << "\n";
  if (superseded > 0) {
    std::cout << "superseded " << superseded << " earlier server record(s)\n";
  }
  if (args.unsafe_debug) {
    std::cout << "unsafe-debug seed_hex=" << device_seed.to_hex() << "\n";
    std::cout << "unsafe-debug key=" << key.to_string() << "\n";
  }
  return kExitAccepted;
}

int cmd_auth(const AuthArgs &args) {
  const rofc::FeatureVector feature = load_single_sample(args.feature_file);
  const rofc::RecordStore devices = load_store_required(args.device_store);
  const rofc::RecordStore servers = load_store_required(args.server_store);

  const rofc::AuthDecision decision =
      rofc::authenticate_user(args.user, feature, devices, servers);
  if (decision.accepted) {
    std::cout << "accepted " << args.user;
    if (decision.corrected_bits) {
      std::cout << " corrected_bits=" << *decision.corrected_bits;
    }
    std::cout << "\n";
    return kExitAccepted;
  }
  if (decision.failure_reason == rofc::AuthFailure::kRecordMissing) {
    std::cerr << "error: user " << args.user << " missing from store\n";
    return kExitData;
  }
  std::cout << "rejected " << args.user << ": "
            << rofc::to_string(*decision.failure_reason) << "\n";
  return kExitRejected;
}

int cmd_synth(const SynthArgs &args) {
  const std::uint64_t seed = args.seed_given ? args.seed : random_u64();
  std::cout << "seed=" << seed << "\n";
  const rofc::Dataset ds = rofc::gen_synthetic(args.subjects, args.samples,
                                               args.dim, args.sigma, seed);
  rofc::save_dataset(ds, args.out);
  std::cout << "wrote " << args.subjects * args.samples << " samples ("
            << args.subjects << " subjects x " << args.samples
            << ", dim " << args.dim << ") to " << args.out << "\n";
  return kExitAccepted;
}

nlohmann::json curve_summary(const std::string &mode,
                             const rofc::RateCurve &curve) {
  nlohmann::json j;
  j["mode"] = mode;
  try {
    const rofc::EerResult eer = rofc::compute_eer(curve);
    j["eer"] = eer.eer;
    j["knob_at_eer"] = eer.knob_at_eer;
  } catch (const rofc::NoCrossingError &e) {
    j["eer"] = nullptr;
    j["knob_at_eer"] = nullptr;
    j["closest"] = {{"knob", e.closest().knob},
                    {"far", e.closest().far},
                    {"frr", e.closest().frr}};
  }
  return j;
}

int cmd_eval(const EvalArgs &args) {
  const std::vector<unsigned> m_values = parse_m_list(args.m_list);
  if (!std::filesystem::exists(args.dataset)) {
    throw rofc::FormatError("dataset not found: " + args.dataset);
  }
  const std::uint64_t seed = args.seed_given ? args.seed : random_u64();
  std::cout << "seed=" << seed << "\n";

  const rofc::Dataset ds = rofc::load_dataset(args.dataset);
  const bool run_baseline = args.mode != "protected";
  const bool run_protected = args.mode != "baseline";

  nlohmann::json baseline_json;
  nlohmann::json protected_json;
  if (run_baseline) {
    const rofc::RateCurve curve =
        rofc::baseline_rates(ds, rofc::threshold_schedule());
    rofc::save_curve(curve, args.out_prefix + "_baseline.csv");
    baseline_json = curve_summary("baseline", curve);
    std::cout << baseline_json.dump() << "\n";
  }
  if (run_protected) {
    rofc::QuantizerSettings settings;
    const rofc::RateCurve curve =
        rofc::protected_rates(ds, m_values, "ham74+rep", settings, seed);
    rofc::save_curve(curve, args.out_prefix + "_protected.csv");
    protected_json = curve_summary("protected", curve);
    std::cout << protected_json.dump() << "\n";
  }
  if (run_baseline && run_protected) {
    nlohmann::json j;
    j["mode"] = "both";
    if (baseline_json["eer"].is_number() && protected_json["eer"].is_number()) {
      j["parity_delta"] = std::abs(baseline_json["eer"].get<double>() -
                                   protected_json["eer"].get<double>());
    } else {
      j["parity_delta"] = nullptr;
    }
    std::cout << j.dump() << "\n";
  }
  return kExitAccepted;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"rotation-based cancelable templates with fuzzy-commitment "
               "key binding"};
  app.require_subcommand(1);

  EnrollArgs enroll_args;
  auto *enroll = app.add_subcommand("enroll", "enroll a user into the stores");
  enroll->add_option("--user", enroll_args.user, "user id")->required();
  enroll->add_option("--feature-file", enroll_args.feature_file,
                     "CSV with exactly one sample row")->required();
  enroll->add_option("--device-store", enroll_args.device_store,
                     "device-side store path")->required();
  enroll->add_option("--server-store", enroll_args.server_store,
                     "server-side store path")->required();
  enroll->add_option("--codec", enroll_args.codec,
                     "codec name (rep<m>, ham74, ham74+rep<m>)");
  enroll->add_option("--bits-per-component", enroll_args.bits_per_component,
                     "quantizer bits per component")
      ->check(CLI::Range(1u, 8u));
  enroll->add_option("--seed-hex", enroll_args.seed_hex,
                     "64 hex chars; derive all secrets deterministically");
  enroll->add_flag("--unsafe-debug", enroll_args.unsafe_debug,
                   "print secrets (testing only)");

  AuthArgs auth_args;
  auto *auth = app.add_subcommand("auth", "authenticate a user");
  auth->add_option("--user", auth_args.user, "user id")->required();
  auth->add_option("--feature-file", auth_args.feature_file,
                   "CSV with exactly one sample row")->required();
  auth->add_option("--device-store", auth_args.device_store,
                   "device-side store path")->required();
  auth->add_option("--server-store", auth_args.server_store,
                   "server-side store path")->required();

  SynthArgs synth_args;
  auto *synth = app.add_subcommand("synth", "generate a synthetic dataset");
  synth->add_option("--subjects", synth_args.subjects, "number of subjects")
      ->required()->check(CLI::PositiveNumber);
  synth->add_option("--samples", synth_args.samples, "samples per subject")
      ->required()->check(CLI::PositiveNumber);
  synth->add_option("--dim", synth_args.dim, "feature dimension (even)")
      ->required()->check(CLI::PositiveNumber);
  synth->add_option("--sigma", synth_args.sigma,
                    "within-subject noise level");
  auto *synth_seed = synth->add_option("--seed", synth_args.seed,
                                       "generator seed (random if omitted)");
  synth->add_option("--out", synth_args.out, "output CSV path")->required();

  EvalArgs eval_args;
  auto *eval = app.add_subcommand("eval", "measure FAR/FRR/EER curves");
  eval->add_option("--dataset", eval_args.dataset, "input dataset CSV")
      ->required();
  eval->add_option("--mode", eval_args.mode, "what to evaluate")
      ->check(CLI::IsMember({"baseline", "protected", "both"}));
  eval->add_option("--m-list", eval_args.m_list,
                   "comma-separated odd repetition factors");
  eval->add_option("--out-prefix", eval_args.out_prefix,
                   "prefix for curve CSV outputs")->required();
  auto *eval_seed = eval->add_option("--seed", eval_args.seed,
                                     "protocol seed (random if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  synth_args.seed_given = synth_seed->count() > 0;
  eval_args.seed_given = eval_seed->count() > 0;

  if (synth->parsed() && synth_args.dim % 2 != 0) {
    std::cerr << "error: --dim must be even\n";
    return kExitUsage;
  }

  try {
    if (enroll->parsed()) return cmd_enroll(enroll_args);
    if (auth->parsed()) return cmd_auth(auth_args);
    if (synth->parsed()) return cmd_synth(synth_args);
    if (eval->parsed()) return cmd_eval(eval_args);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rofc::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
