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

#include <array>

#include "entfb/master_equation.hpp"
#include "entfb/types.hpp"

namespace entfb::entanglement {

using master_equation::DensityMatrix;

struct ConcurrenceResult {
  double value = 0.0;
  /// Square roots of |eigenvalues of rho rho_tilde|, descending.
  std::array<double, 4> xi{};
};

/// (sy (x) sy) conj(rho) (sy (x) sy), conjugation taken entrywise in the
/// product basis.
Operator spin_flip(const Operator& rho);

/// Wootters concurrence from the non-Hermitian eigenvalues of rho rho_tilde.
/// Throws NumericDegeneracy when an eigenvalue has |Im| >= 1e-6 or is NaN.
ConcurrenceResult concurrence(const DensityMatrix& rho);

/// Same quantity through the Hermitian matrix sqrt(rho) rho_tilde sqrt(rho).
ConcurrenceResult concurrence_hermitian(const DensityMatrix& rho);

/// 2 |a_ee a_gg - a_ge a_eg|. Throws ContractViolation unless |psi| = 1
/// within 1e-10.
double concurrence_pure(const StateVector& psi);

}  // namespace entfb::entanglement
