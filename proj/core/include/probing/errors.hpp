// Copyright 2026 The Authors.
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

#ifndef PROBING_ERRORS_HPP_
#define PROBING_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace probing {

class ProbingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument values: out-of-range elements, probabilities, deadlines,
// infeasible fractional points.
class DomainError : public ProbingError {
 public:
  using ProbingError::ProbingError;
};

// The requested oracle would need an enumeration beyond its configured cap.
class CapabilityError : public ProbingError {
 public:
  using ProbingError::ProbingError;
};

// A caller broke a documented precondition (e.g. a non-greedy path order).
class ContractError : public ProbingError {
 public:
  using ProbingError::ProbingError;
};

// Rejected algorithm configuration (e.g. a non-positive rounding guarantee).
class ConfigError : public ProbingError {
 public:
  using ProbingError::ProbingError;
};

}  // namespace probing

#endif  // PROBING_ERRORS_HPP_
