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

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>

#include "rofc/errors.hpp"

namespace rofc {

namespace {

constexpr char kMagic[4] = {'R', 'O', 'F', 'C'};
constexpr std::uint8_t kKindDevice = 0;
constexpr std::uint8_t kKindServer = 1;

void put_u8(std::vector<std::uint8_t> &out, std::uint8_t v) {
  out.push_back(v);
}

void put_u16(std::vector<std::uint8_t> &out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t> &out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

void put_u64(std::vector<std::uint8_t> &out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

void put_f64(std::vector<std::uint8_t> &out, double v) {
  std::uint64_t raw = 0;
  std::memcpy(&raw, &v, sizeof raw);
  put_u64(out, raw);
}

void put_short_string(std::vector<std::uint8_t> &out, const std::string &s) {
  if (s.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw FormatError("string too long to serialize: " +
                      std::to_string(s.size()) + " bytes");
  }
  put_u16(out, static_cast<std::uint16_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}

void put_bits(std::vector<std::uint8_t> &out, const BitString &bits) {
  if (bits.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw FormatError("bit string too long to serialize");
  }
  put_u32(out, static_cast<std::uint32_t>(bits.size()));
  const auto packed = bits.to_bytes();
  out.insert(out.end(), packed.begin(), packed.end());
}

// Bounds-checked big-endian-bit / little-endian-int reader over one buffer.
class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t remaining() const { return data_.size() - pos_; }

  std::span<const std::uint8_t> take(std::size_t n, const char *what) {
    if (remaining() < n) {
      throw FormatError(std::string("store file truncated reading ") + what);
    }
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::uint8_t u8(const char *what) { return take(1, what)[0]; }

  std::uint16_t u16(const char *what) {
    auto b = take(2, what);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
  }

  std::uint32_t u32(const char *what) {
    auto b = take(4, what);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }

  std::uint64_t u64(const char *what) {
    auto b = take(8, what);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }

  double f64(const char *what) {
    const std::uint64_t raw = u64(what);
    double v = 0.0;
    std::memcpy(&v, &raw, sizeof v);
    return v;
  }

  std::string short_string(const char *what) {
    const std::uint16_t len = u16(what);
    auto b = take(len, what);
    return std::string(b.begin(), b.end());
  }

  BitString bits(const char *what) {
    const std::uint32_t len = u32(what);
    const std::size_t bytes = (static_cast<std::size_t>(len) + 7) / 8;
    return BitString::from_bytes(take(bytes, what), len);
  }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

void append_device_record(std::vector<std::uint8_t> &out,
                          const DeviceRecord &rec) {
  put_short_string(out, rec.user_id);
  put_u8(out, kKindDevice);
  out.insert(out.end(), rec.seed.bytes.begin(), rec.seed.bytes.end());
  put_u64(out, static_cast<std::uint64_t>(rec.created_at));
}

void append_server_record(std::vector<std::uint8_t> &out,
                          const ServerRecord &rec) {
  put_short_string(out, rec.user_id);
  put_u8(out, kKindServer);
  put_bits(out, rec.helper.hd_bits);
  put_short_string(out, rec.helper.codec);
  out.insert(out.end(), rec.helper.key_digest.begin(),
             rec.helper.key_digest.end());
  put_u32(out, rec.dim);
  put_u8(out, static_cast<std::uint8_t>(rec.quantizer.bits_per_component));
  put_f64(out, rec.quantizer.range_halfwidth);
  put_u32(out, rec.truncation_len);
  put_u8(out, rec.version);
  put_u8(out, rec.revoked ? 1 : 0);
}

DeviceRecord read_device_payload(Reader &r, std::string user_id) {
  DeviceRecord rec;
  rec.user_id = std::move(user_id);
  auto seed = r.take(32, "device seed");
  std::memcpy(rec.seed.bytes.data(), seed.data(), 32);
  rec.created_at = static_cast<std::int64_t>(r.u64("created_at"));
  return rec;
}

ServerRecord read_server_payload(Reader &r, std::string user_id) {
  ServerRecord rec;
  rec.user_id = std::move(user_id);
  rec.helper.hd_bits = r.bits("helper bits");
  rec.helper.codec = r.short_string("codec name");
  auto digest = r.take(kDigestBytes, "key digest");
  std::memcpy(rec.helper.key_digest.data(), digest.data(), kDigestBytes);
  rec.dim = r.u32("dim");
  rec.quantizer.bits_per_component = r.u8("bits_per_component");
  rec.quantizer.range_halfwidth = r.f64("range_halfwidth");
  rec.truncation_len = r.u32("truncation_len");
  rec.version = r.u8("record version");
  const std::uint8_t revoked = r.u8("revoked flag");
  if (revoked > 1) {
    throw FormatError("revoked flag must be 0 or 1, got " +
                      std::to_string(revoked));
  }
  rec.revoked = revoked == 1;
  return rec;
}

}  // namespace

const DeviceRecord *RecordStore::find_device(const std::string &user_id) const {
  const DeviceRecord *found = nullptr;
  for (const auto &rec : devices) {
    if (rec.user_id == user_id) found = &rec;
  }
  return found;
}

const ServerRecord *RecordStore::find_server(const std::string &user_id) const {
  const ServerRecord *found = nullptr;
  for (const auto &rec : servers) {
    if (rec.user_id == user_id && !rec.revoked) found = &rec;
  }
  return found;
}

std::size_t RecordStore::supersede(const std::string &user_id) {
  std::size_t flagged = 0;
  for (auto &rec : servers) {
    if (rec.user_id == user_id && !rec.revoked) {
      rec.revoked = true;
      ++flagged;
    }
  }
  return flagged;
}

std::vector<std::uint8_t> serialize_store(const RecordStore &store) {
  const std::size_t count = store.devices.size() + store.servers.size();
  if (count > std::numeric_limits<std::uint32_t>::max()) {
    throw FormatError("store has too many records to serialize");
  }
  std::vector<std::uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u8(out, kStoreVersion);
  put_u32(out, static_cast<std::uint32_t>(count));
  for (const auto &rec : store.devices) append_device_record(out, rec);
  for (const auto &rec : store.servers) append_server_record(out, rec);
  return out;
}

RecordStore deserialize_store(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  auto magic = r.take(4, "magic");
  if (std::memcmp(magic.data(), kMagic, 4) != 0) {
    throw FormatError("not a record store file (bad magic)");
  }
  const std::uint8_t version = r.u8("store version");
  if (version > kStoreVersion) {
    throw VersionError("store version " + std::to_string(version) +
                           " is newer than supported version " +
                           std::to_string(kStoreVersion),
                       kStoreVersion);
  }
  const std::uint32_t count = r.u32("record count");
  RecordStore store;
  for (std::uint32_t i = 0; i < count; ++i) {
    std::string user_id = r.short_string("user id");
    const std::uint8_t kind = r.u8("record kind");
    switch (kind) {
      case kKindDevice:
        store.devices.push_back(read_device_payload(r, std::move(user_id)));
        break;
      case kKindServer:
        store.servers.push_back(read_server_payload(r, std::move(user_id)));
        break;
      default:
        throw FormatError("unknown record kind " + std::to_string(kind));
    }
  }
  if (r.remaining() != 0) {
    throw FormatError("store file has " + std::to_string(r.remaining()) +
                      " trailing bytes");
  }
  return store;
}

void store_save(const RecordStore &store, const std::string &path) {
  const auto bytes = serialize_store(store);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    out.write(reinterpret_cast<const char *>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw Error("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot replace " + path + ": " + ec.message());
  }
}

RecordStore store_load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error("read failed for " + path);
  return deserialize_store(bytes);
}

std::vector<std::uint8_t> serialize_server_record(const ServerRecord &rec) {
  std::vector<std::uint8_t> out;
  append_server_record(out, rec);
  return out;
}

AuthDecision authenticate_user(const std::string &user_id,
                               const FeatureVector &query,
                               const RecordStore &device_store,
                               const RecordStore &server_store) {
  const DeviceRecord *dev = device_store.find_device(user_id);
  const ServerRecord *srv = server_store.find_server(user_id);
  if (dev == nullptr || srv == nullptr) {
    AuthDecision decision;
    decision.accepted = false;
    decision.failure_reason = AuthFailure::kRecordMissing;
    return decision;
  }
  return authenticate(query, *dev, *srv);
}

}  // namespace rofc
