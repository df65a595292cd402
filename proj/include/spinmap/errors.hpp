// Copyright 2026 The spinmap Authors
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

namespace spinmap {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands act on registers of different sizes.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// An operator was handed to a mapping for a different particle statistics.
class WrongStatisticsError : public Error {
  public:
    using Error::Error;
};

/// A control qubit overlaps the support of the controlled operator.
class OverlapError : public Error {
  public:
    using Error::Error;
};

/// A dense-matrix computation was requested above the configured qubit limit.
class OracleLimitError : public Error {
  public:
    using Error::Error;
};

/// An operator that must be Hermitian is not.
class NotHermitianError : public Error {
  public:
    using Error::Error;
};

/// Generic precondition violation (out-of-range index, bad parameter, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Malformed input text. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) +
                               ": " + what
                         : what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace spinmap
