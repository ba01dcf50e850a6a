// Copyright 2026 The rdispatch Authors
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

#ifndef RDISPATCH_ERRORS_HPP_
#define RDISPATCH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rdispatch {

// Malformed input files (JSON/CSV syntax, missing fields, bad headers).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that parse but break a domain invariant (invalid model, tariff
// that is not convex where convexity is required, mismatched horizons).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvexTariffError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace rdispatch

#endif  // RDISPATCH_ERRORS_HPP_
