// Copyright 2026 The Tractatus Network Authors.
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

namespace tnet {

// Base class for every error raised by the library. Callers that only care
// about "the input was bad" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: a proposition number, a resource line, a record.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  // Character offset (for numbers) or 1-based line number (for files).
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Input that parses but violates a data invariant (duplicates, empty
// corpora, missing files, invalid documents).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace tnet
