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

#ifndef ROFC_ERRORS_HPP_
#define ROFC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rofc {

/// Base class for all rofc errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// A vector or matrix dimension is invalid or two dimensions disagree.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string &msg) : Error(msg) {}
};

/// A bit-string length is invalid or two lengths disagree.
class LengthError : public Error {
 public:
  explicit LengthError(const std::string &msg) : Error(msg) {}
};

/// A serialized record or file is malformed.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string &msg) : Error(msg) {}
};

/// A serialized file declares a version newer than this build supports.
class VersionError : public FormatError {
 public:
  VersionError(const std::string &msg, unsigned max_supported)
      : FormatError(msg), max_supported_(max_supported) {}
  unsigned max_supported() const { return max_supported_; }

 private:
  unsigned max_supported_;
};

/// A CSV dataset row could not be ingested. Carries the 1-based line number.
class IngestError : public Error {
 public:
  IngestError(const std::string &msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rofc

#endif  // ROFC_ERRORS_HPP_
