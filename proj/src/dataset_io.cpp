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

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rofc/errors.hpp"
#include "rofc/eval.hpp"

namespace rofc {

namespace {

std::vector<std::string> split_fields(const std::string &line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_double(const std::string &field, std::size_t line_no,
                    std::size_t column) {
  double value = 0;
  const char *first = field.data();
  const char *last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw IngestError("field " + std::to_string(column) + " is not a number: \"" +
                          field + "\"",
                      line_no);
  }
  if (!std::isfinite(value)) {
    throw IngestError("field " + std::to_string(column) + " is not finite",
                      line_no);
  }
  return value;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw Error("float formatting failed");
  return std::string(buf, ptr);
}

void write_header(std::ofstream &out, std::size_t dim) {
  out << "subject_id,sample_id";
  for (std::size_t i = 0; i < dim; ++i) out << ",f" << i;
  out << "\n";
}

}  // namespace

Dataset load_dataset(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw IngestError("file is empty", 1);
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split_fields(line);
  if (header.size() < 3 || header[0] != "subject_id" ||
      header[1] != "sample_id") {
    throw IngestError(
        "header must be subject_id,sample_id,f0,... , got \"" + line + "\"",
        line_no);
  }
  const std::size_t dim = header.size() - 2;
  for (std::size_t i = 0; i < dim; ++i) {
    if (header[2 + i] != "f" + std::to_string(i)) {
      throw IngestError("feature column " + std::to_string(i) +
                            " must be named f" + std::to_string(i) +
                            ", got \"" + header[2 + i] + "\"",
                        line_no);
    }
  }

  Dataset ds;
  ds.dim = dim;
  std::unordered_map<std::string, std::size_t> index_of;
  std::unordered_set<std::string> seen_samples;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      throw IngestError("blank line in data section", line_no);
    }
    const auto fields = split_fields(line);
    if (fields.size() != 2 + dim) {
      throw IngestError("row has " + std::to_string(fields.size()) +
                            " fields, expected " + std::to_string(2 + dim),
                        line_no);
    }
    const std::string &subject_id = fields[0];
    const std::string &sample_id = fields[1];
    if (subject_id.empty()) throw IngestError("empty subject_id", line_no);
    if (sample_id.empty()) throw IngestError("empty sample_id", line_no);
    if (!seen_samples.insert(subject_id + "\x1f" + sample_id).second) {
      throw IngestError("duplicate sample " + subject_id + "/" + sample_id,
                        line_no);
    }

    FeatureVector sample(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      sample[i] = parse_double(fields[2 + i], line_no, 2 + i);
    }

    auto [it, inserted] = index_of.try_emplace(subject_id, ds.subjects.size());
    if (inserted) {
      ds.subjects.push_back({subject_id, {}});
    }
    ds.subjects[it->second].samples.push_back(std::move(sample));
  }
  if (in.bad()) throw Error("read failed for " + path);
  if (ds.subjects.empty()) throw IngestError("no data rows", line_no + 1);
  return ds;
}

void save_dataset(const Dataset &ds, const std::string &path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_header(out, ds.dim);
  for (const auto &subject : ds.subjects) {
    for (std::size_t j = 0; j < subject.samples.size(); ++j) {
      const auto &sample = subject.samples[j];
      if (sample.size() != ds.dim) {
        throw DimensionError("sample of subject " + subject.id +
                             " has dimension " +
                             std::to_string(sample.size()) +
                             ", dataset says " + std::to_string(ds.dim));
      }
      out << subject.id << ',' << j;
      for (double v : sample) out << ',' << format_double(v);
      out << "\n";
    }
  }
  out.flush();
  if (!out) throw Error("write failed for " + path);
}

void save_curve(const RateCurve &curve, const std::string &path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << "knob,far,frr\n";
  for (const auto &p : curve.points) {
    out << format_double(p.knob) << ',' << format_double(p.far) << ','
        << format_double(p.frr) << "\n";
  }
  out.flush();
  if (!out) throw Error("write failed for " + path);
}

}  // namespace rofc
