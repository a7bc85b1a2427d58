// Copyright 2026 The stochgame Authors.
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

#ifndef STOCHGAME_ERRORS_HPP_
#define STOCHGAME_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stochgame {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments or malformed input. The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Game file text could not be parsed. Line and column are 1-based; 0 means
// the location is a field path rather than a text position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A structural invariant of a game or strategy does not hold.
class InvariantError : public InputError {
 public:
  using InputError::InputError;
};

// Fixed-point iteration hit its cap. Exit code 3 at the CLI.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : Error(what), last_residual_(last_residual) {}
  double last_residual() const { return last_residual_; }

 private:
  double last_residual_;
};

// select_block_length found no admissible block length (horizon below n0).
class NotReadyError : public Error {
 public:
  using Error::Error;
};

}  // namespace stochgame

#endif  // STOCHGAME_ERRORS_HPP_
