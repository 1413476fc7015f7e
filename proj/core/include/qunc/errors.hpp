// Copyright 2026 The qunc Authors
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

namespace qunc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violated one of its type invariants. The message names the bound
// and the observed value.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Input that should be Hermitian is not.
class HermiticityError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// An eigenvalue fell below the allowed negative slack.
class PositivityError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// Sum of K^dagger K differs from the identity.
class CompletenessError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qunc
