// Copyright 2026 The cvqe Authors
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

namespace cvqe {

// Shapes of operands disagree (qubit counts, matrix sizes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a structural contract (non-Hermitian operator, bad permutation, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds what the dense simulator is willing to allocate.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested occupation sector has no basis states.
class EmptySectorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Readout correction could not be applied (singular or ill-conditioned calibration).
class MitigationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvqe
