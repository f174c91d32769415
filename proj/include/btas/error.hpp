// Copyright 2026 The BTAS Authors
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

#ifndef BTAS_ERROR_HPP_
#define BTAS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace btas {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weight, probability or size argument outside its domain (NaN weight,
/// zero dimension, empty range ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operand shapes are incompatible.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operands were built over different semirings, or the operation does not
/// apply to the operand's semiring.
class KindError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 when the error is not tied
/// to a single line (e.g. a missing row at end of input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace btas

#endif  // BTAS_ERROR_HPP_
