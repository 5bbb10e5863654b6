// Copyright 2026 The Heatpath Authors
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

#ifndef HEATPATH_ERROR_HPP_
#define HEATPATH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace heatpath {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed a value outside the documented domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed input text (heatmap CSV, plan or experiment documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a domain invariant, e.g. a heat-value
// outside the palette.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A stored quantity disagrees with its recomputation.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace heatpath

#endif  // HEATPATH_ERROR_HPP_
