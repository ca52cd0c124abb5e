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

#ifndef ROFC_RECORD_STORE_HPP_
#define ROFC_RECORD_STORE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rofc/protocol.hpp"

namespace rofc {

/// In-memory collection of records backing one store file. Device and
/// server records normally live in two separate files so the trust
/// boundary is physical, but the format carries either kind.
///
/// Writes to one path must be serialized by the caller (single writer,
/// any number of readers); concurrent writers are unsupported.
struct RecordStore {
  std::vector<DeviceRecord> devices;
  std::vector<ServerRecord> servers;

  /// Latest device record for a user, nullptr when absent.
  const DeviceRecord *find_device(const std::string &user_id) const;
  /// Latest non-revoked server record for a user, nullptr when absent.
  const ServerRecord *find_server(const std::string &user_id) const;

  /// Flag every live server record of the user as revoked. Returns the
  /// number of records flagged. Superseded records stay in the store.
  std::size_t supersede(const std::string &user_id);

  bool operator==(const RecordStore &) const = default;
};

// Store file layout, version 1, all integers little-endian:
//   magic "ROFC" | version u8 | record count u32
// then per record:
//   user_id: u16 byte length + UTF-8 bytes
//   kind: u8 (0 = device, 1 = server)
//   device payload: seed 32 raw bytes | created_at i64
//   server payload: hd bits (u32 bit length + packed bytes, big-endian bit
//     order within byte) | codec name u16 length + UTF-8 | key digest 32
//     raw bytes | dim u32 | bits_per_component u8 | range_halfwidth f64 |
//     truncation_len u32 | record version u8 | revoked u8

inline constexpr std::uint8_t kStoreVersion = 1;

std::vector<std::uint8_t> serialize_store(const RecordStore &store);
RecordStore deserialize_store(std::span<const std::uint8_t> bytes);

/// Serialize to a file. Overwrites atomically (write temp, rename).
void store_save(const RecordStore &store, const std::string &path);
/// Load a store file. Throws FormatError on corruption, VersionError on
/// versions newer than kStoreVersion; never returns a partial store.
RecordStore store_load(const std::string &path);

/// Serialized form of a single server record, as it appears in the store
/// body. Exposed for leakage checks and tests.
std::vector<std::uint8_t> serialize_server_record(const ServerRecord &rec);

/// Authenticate by user id against loaded stores. Missing records map to
/// AuthFailure::kRecordMissing rather than an exception.
AuthDecision authenticate_user(const std::string &user_id,
                               const FeatureVector &query,
                               const RecordStore &device_store,
                               const RecordStore &server_store);

}  // namespace rofc

#endif  // ROFC_RECORD_STORE_HPP_
