// Copyright 2026 The kscheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KSCHECK_ERROR_H_
#define KSCHECK_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kscheck {

// Raised when an operation's precondition is violated (zero direction,
// dimension mismatch, empty subspace, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the vector-set reader. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace kscheck

#endif  // KSCHECK_ERROR_H_
