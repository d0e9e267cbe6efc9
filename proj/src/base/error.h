// base/error.h

// Copyright 2026  Clearwave Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CLEARWAVE_BASE_ERROR_H_
#define CLEARWAVE_BASE_ERROR_H_

#include <stdexcept>
#include <string>

namespace clearwave {

// Error taxonomy maps onto process exit codes:
//   DataError -> 1, ConfigError -> 2, NumericalError -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Bad or missing input data (corrupt files, mismatched lengths, empty input).
class DataError : public Error {
 public:
  explicit DataError(const std::string &msg) : Error(msg) {}
};

// Malformed file contents (bad header, unparseable text).
class FormatError : public DataError {
 public:
  explicit FormatError(const std::string &msg) : DataError(msg) {}
};

// Well-formed but unsupported encoding or feature.
class UnsupportedError : public DataError {
 public:
  explicit UnsupportedError(const std::string &msg) : DataError(msg) {}
};

// Invalid configuration or invalid call (out-of-range arguments,
// inconsistent dimensions).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &msg) : Error(msg) {}
};

class ArgumentError : public ConfigError {
 public:
  explicit ArgumentError(const std::string &msg) : ConfigError(msg) {}
};

// Numerical failure at runtime (divergence, non-finite objective).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string &msg) : Error(msg) {}
};

#define CLEARWAVE_CHECK_ARG(cond, msg) \
  do {                                 \
    if (!(cond)) throw ::clearwave::ArgumentError(msg); \
  } while (0)

}  // namespace clearwave

#endif  // CLEARWAVE_BASE_ERROR_H_
