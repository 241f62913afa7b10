// Copyright 2026 The Flatscreen Authors.
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

#ifndef FLATSCREEN_ERROR_H_
#define FLATSCREEN_ERROR_H_

#include <stdexcept>
#include <string>

namespace flatscreen {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Raised when a vector or network does not have the expected shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Raised for malformed input files. The message names the line and field.
class ParseError : public Error {
 public:
  ParseError(const std::string &source, int line, const std::string &what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace flatscreen

#endif  // FLATSCREEN_ERROR_H_
