// Copyright 2026 asrnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace asrnoise {

// Failure classes. Each class maps to a distinct process exit code so
// callers can tell usage, I/O and data problems apart.
enum class ErrorKind {
  Usage,       // bad command line
  Io,          // missing or unreadable file
  Data,        // malformed input, line-count mismatch, undefined rate
  Config,      // inconsistent options or missing context tables
  Structural,  // internal shape violations (dimensions, alignment order)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error usage_error(const std::string& m) { return Error(ErrorKind::Usage, m); }
inline Error io_error(const std::string& m) { return Error(ErrorKind::Io, m); }
inline Error data_error(const std::string& m) { return Error(ErrorKind::Data, m); }
inline Error config_error(const std::string& m) { return Error(ErrorKind::Config, m); }
inline Error structural_error(const std::string& m) { return Error(ErrorKind::Structural, m); }

// 0 success, 2 usage, 3 I/O, 4 invalid data or configuration.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
      return 2;
    case ErrorKind::Io:
      return 3;
    default:
      return 4;
  }
}

}  // namespace asrnoise
