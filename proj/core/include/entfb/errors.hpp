// Copyright 2026 The entfb Authors
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

namespace entfb {

/// Caller broke a documented precondition (bad shape, non-Hermitian input...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside the domain of a closed-form expression.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base for failures of a numerical procedure on valid input.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The generator has more than one stationary state.
class DegenerateSteadyState : public NumericalFailure {
 public:
  DegenerateSteadyState(double smallest, double second_smallest);

  double smallest() const noexcept { return smallest_; }
  double second_smallest() const noexcept { return second_smallest_; }

 private:
  double smallest_;
  double second_smallest_;
};

/// Fixed-step integration lost trace or went unstable.
class StepSizeError : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// The spectrum of rho * rho_tilde is not real and non-negative to tolerance.
class NumericDegeneracy : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace entfb
