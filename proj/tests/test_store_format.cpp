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

#include "rofc/record_store.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "doctest.h"
#include "rofc/errors.hpp"
#include "rofc/protocol.hpp"

using rofc::BitString;
using rofc::DeviceRecord;
using rofc::RecordStore;
using rofc::Seed;
using rofc::ServerRecord;

namespace {

DeviceRecord sample_device(const std::string &user, std::uint8_t fill,
                           std::int64_t created_at) {
  DeviceRecord rec;
  rec.user_id = user;
  for (std::size_t i = 0; i < rec.seed.bytes.size(); ++i) {
    rec.seed.bytes[i] = static_cast<std::uint8_t>(fill + i);
  }
  rec.created_at = created_at;
  return rec;
}

ServerRecord sample_server(const std::string &user, bool revoked) {
  ServerRecord rec;
  rec.user_id = user;
  rec.helper.hd_bits = BitString::from_string("1011000001");
  rec.helper.codec = "rep3";
  for (std::size_t i = 0; i < rec.helper.key_digest.size(); ++i) {
    rec.helper.key_digest[i] = static_cast<std::uint8_t>(0x20 + i);
  }
  rec.dim = 64;
  rec.quantizer.bits_per_component = 1;
  rec.quantizer.range_halfwidth = 1.0;
  rec.truncation_len = 10;
  rec.version = 1;
  rec.revoked = revoked;
  return rec;
}

bool contains_subsequence(const std::vector<std::uint8_t> &haystack,
                          std::span<const std::uint8_t> needle) {
  if (needle.empty() || haystack.size() < needle.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

}  // namespace

TEST_CASE("device record serializes to the documented bytes") {
  RecordStore store;
  store.devices.push_back(sample_device("ab", 0x00, 0x0102030405060708));

  const std::vector<std::uint8_t> expect = [] {
    std::vector<std::uint8_t> b = {
        'R', 'O', 'F', 'C',       // magic
        0x01,                     // store version
        0x01, 0x00, 0x00, 0x00,  // record count
        0x02, 0x00, 'a', 'b',    // user id
        0x00,                     // kind: device
    };
    for (int i = 0; i < 32; ++i) b.push_back(static_cast<std::uint8_t>(i));
    const std::uint8_t created[] = {0x08, 0x07, 0x06, 0x05,
                                    0x04, 0x03, 0x02, 0x01};
    b.insert(b.end(), created, created + 8);
    return b;
  }();
  CHECK(rofc::serialize_store(store) == expect);
}

TEST_CASE("server record serializes to the documented bytes") {
  const ServerRecord rec = sample_server("u", false);
  const std::vector<std::uint8_t> expect = [] {
    std::vector<std::uint8_t> b = {
        0x01, 0x00, 'u',          // user id
        0x01,                     // kind: server
        0x0a, 0x00, 0x00, 0x00,  // helper bit length
        0xb0, 0x40,               // "1011000001" packed MSB-first
        0x04, 0x00, 'r', 'e', 'p', '3',
    };
    for (int i = 0; i < 32; ++i) {
      b.push_back(static_cast<std::uint8_t>(0x20 + i));
    }
    const std::uint8_t tail[] = {
        0x40, 0x00, 0x00, 0x00,                          // dim = 64
        0x01,                                            // bits per component
        0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0xf0, 0x3f,  // halfwidth = 1.0
        0x0a, 0x00, 0x00, 0x00,                          // truncation_len
        0x01,                                            // record version
        0x00,                                            // revoked
    };
    b.insert(b.end(), tail, tail + sizeof tail);
    return b;
  }();
  CHECK(rofc::serialize_server_record(rec) == expect);
}

TEST_CASE("store round trips exactly") {
  RecordStore store;
  store.devices.push_back(sample_device("alice", 0x10, 1700000000));
  store.devices.push_back(sample_device("bob", 0x55, 1700000001));
  store.servers.push_back(sample_server("alice", false));
  store.servers.push_back(sample_server("alice", true));
  store.servers.push_back(sample_server("carol", false));

  const auto bytes = rofc::serialize_store(store);
  const RecordStore loaded = rofc::deserialize_store(bytes);
  CHECK(loaded.devices == store.devices);
  CHECK(loaded.servers == store.servers);
  CHECK(rofc::serialize_store(loaded) == bytes);
}

TEST_CASE("an empty store round trips") {
  const auto bytes = rofc::serialize_store(RecordStore{});
  CHECK(bytes.size() == 9);
  const RecordStore loaded = rofc::deserialize_store(bytes);
  CHECK(loaded.devices.empty());
  CHECK(loaded.servers.empty());
}

TEST_CASE("every strict prefix is rejected as truncated") {
  RecordStore store;
  store.devices.push_back(sample_device("dora", 0x01, 42));
  store.servers.push_back(sample_server("dora", false));
  const auto bytes = rofc::serialize_store(store);
  for (std::size_t len = 0; len < bytes.size(); ++len) {
    const std::span<const std::uint8_t> prefix(bytes.data(), len);
    CHECK_THROWS_AS(rofc::deserialize_store(prefix), rofc::FormatError);
  }
}

TEST_CASE("future store versions are refused with the supported max") {
  const auto bytes = rofc::serialize_store(RecordStore{});
  for (std::uint8_t version : {std::uint8_t{2}, std::uint8_t{255}}) {
    auto tampered = bytes;
    tampered[4] = version;
    try {
      rofc::deserialize_store(tampered);
      FAIL("expected VersionError");
    } catch (const rofc::VersionError &e) {
      CHECK(e.max_supported() == rofc::kStoreVersion);
      CHECK(rofc::kStoreVersion == 1);
    }
  }
}

TEST_CASE("bad magic, trailing bytes and bad flags are rejected") {
  auto bytes = rofc::serialize_store(RecordStore{});

  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(rofc::deserialize_store(bad_magic), rofc::FormatError);

  auto trailing = bytes;
  trailing.push_back(0x00);
  CHECK_THROWS_AS(rofc::deserialize_store(trailing), rofc::FormatError);

  RecordStore store;
  store.servers.push_back(sample_server("eve", false));
  auto revoked_two = rofc::serialize_store(store);
  revoked_two.back() = 0x02;
  CHECK_THROWS_AS(rofc::deserialize_store(revoked_two), rofc::FormatError);

  RecordStore dev_store;
  dev_store.devices.push_back(sample_device("eve", 0x00, 0));
  auto bad_kind = rofc::serialize_store(dev_store);
  // magic(4) + version(1) + count(4) + id length(2) + "eve"(3) = offset 14.
  bad_kind[14] = 0x07;
  CHECK_THROWS_AS(rofc::deserialize_store(bad_kind), rofc::FormatError);
}

TEST_CASE("serialized server records leak neither seed nor key") {
  std::mt19937_64 rng(401);
  const std::size_t dim = 64;
  const rofc::CodecSpec codec = rofc::CodecSpec::fit("ham74+rep3", dim);
  for (int trial = 0; trial < 20; ++trial) {
    rofc::FeatureVector feature(dim);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double &v : feature) v = unit(rng);
    Seed seed;
    for (auto &b : seed.bytes) b = static_cast<std::uint8_t>(rng());
    BitString key(codec.message_bits());
    for (std::size_t i = 0; i < key.size(); ++i) key.set(i, rng() & 1);

    const auto result = rofc::enroll("frank", feature, seed, key, codec, {});
    const auto bytes = rofc::serialize_server_record(result.server);

    CHECK_FALSE(contains_subsequence(bytes, seed.bytes));
    CHECK_FALSE(contains_subsequence(
        bytes, std::span<const std::uint8_t>(seed.bytes.data(), 8)));
    const auto key_bytes = key.to_bytes();
    // Skip degenerate short patterns; 5 bytes of key is already a
    // 2^-40 coincidence bound for a 100-byte record.
    CHECK_FALSE(contains_subsequence(
        bytes, std::span<const std::uint8_t>(key_bytes.data(),
                                             std::min<std::size_t>(
                                                 key_bytes.size(), 5))));
  }
}

TEST_CASE("find_device returns the latest record for a user") {
  RecordStore store;
  store.devices.push_back(sample_device("gina", 0x01, 100));
  store.devices.push_back(sample_device("gina", 0x02, 200));
  store.devices.push_back(sample_device("hank", 0x03, 300));
  const DeviceRecord *found = store.find_device("gina");
  REQUIRE(found != nullptr);
  CHECK(found->created_at == 200);
  CHECK(store.find_device("nobody") == nullptr);
}

TEST_CASE("find_server skips revoked records") {
  RecordStore store;
  store.servers.push_back(sample_server("ivan", true));
  store.servers.push_back(sample_server("ivan", false));
  const ServerRecord *found = store.find_server("ivan");
  REQUIRE(found != nullptr);
  CHECK_FALSE(found->revoked);

  RecordStore all_revoked;
  all_revoked.servers.push_back(sample_server("judy", true));
  CHECK(all_revoked.find_server("judy") == nullptr);
}

TEST_CASE("supersede flags every live record once") {
  RecordStore store;
  store.servers.push_back(sample_server("kyle", false));
  store.servers.push_back(sample_server("kyle", false));
  store.servers.push_back(sample_server("lena", false));
  CHECK(store.supersede("kyle") == 2);
  CHECK(store.supersede("kyle") == 0);
  CHECK(store.find_server("kyle") == nullptr);
  CHECK(store.find_server("lena") != nullptr);
}

TEST_CASE("authenticate_user reports missing records") {
  RecordStore devices;
  RecordStore servers;
  const rofc::FeatureVector query(64, 0.5);

  auto decision = rofc::authenticate_user("mia", query, devices, servers);
  CHECK_FALSE(decision.accepted);
  CHECK(*decision.failure_reason == rofc::AuthFailure::kRecordMissing);

  devices.devices.push_back(sample_device("mia", 0x09, 1));
  decision = rofc::authenticate_user("mia", query, devices, servers);
  CHECK(*decision.failure_reason == rofc::AuthFailure::kRecordMissing);

  servers.servers.push_back(sample_server("mia", true));
  decision = rofc::authenticate_user("mia", query, devices, servers);
  CHECK(*decision.failure_reason == rofc::AuthFailure::kRecordMissing);
}

TEST_CASE("save and load round trip through a file") {
  const auto dir = std::filesystem::temp_directory_path() / "rofc_store_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "records.rofc").string();

  RecordStore store;
  store.devices.push_back(sample_device("nora", 0x44, 1234567890));
  store.servers.push_back(sample_server("nora", false));
  rofc::store_save(store, path);

  const RecordStore loaded = rofc::store_load(path);
  CHECK(loaded.devices == store.devices);
  CHECK(loaded.servers == store.servers);
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));

  CHECK_THROWS_AS(rofc::store_load((dir / "absent.rofc").string()),
                  rofc::Error);
  std::filesystem::remove_all(dir);
}
