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

#include "entfb/types.hpp"

namespace entfb::hamiltonian {

/// Energies and eigenvectors. The closed-form builder keeps the listed
/// order E1 = -2J sqrt(1+eta^2), E2 = -2J, E3 = 2J, E4 = 2J sqrt(1+eta^2),
/// which for J > 0 is ascending with E4 = 2 sqrt(a^2+J^2). The numeric
/// builder sorts ascending.
struct EigenSystem {
  std::array<double, 4> energies{};
  std::array<StateVector, 4> vectors{};
};

/// Amplitudes of |g>1|g>2 in the closed-form eigenbasis.
struct InitialExpansion {
  std::array<Complex, 4> coefficients{};
};

/// 2 J sz1 sz2
Operator build_h_int(const ModelParams& p);
/// alpha (sy1 + sy2)
Operator build_h_drive(const ModelParams& p);
Operator build_h_tot(const ModelParams& p);

/// Closed-form eigensystem of H_tot. Requires alpha != 0 and J != 0; the
/// expressions are singular at eta = 0 (use numeric_eigensystem there).
EigenSystem analytic_eigensystem(const ModelParams& p);

/// Dense Hermitian eigendecomposition. Throws ContractViolation on
/// non-Hermitian input.
EigenSystem numeric_eigensystem(const Operator& h);

/// Coefficients C1..C4 of |gg> over analytic_eigensystem(p). C2 is exactly 0.
InitialExpansion initial_expansion(const ModelParams& p);

/// |Psi(tau)> from |gg> at scaled time tau = J t, using the closed-form
/// expansion with phases exp(-i E_k t). Requires eta != 0.
StateVector evolve_closed(const ModelParams& p, double tau);

/// Same evolution via the numeric eigendecomposition of H_tot. Valid for any
/// J != 0, including alpha = 0.
StateVector evolve_closed_numeric(const ModelParams& p, double tau);

/// The marker observable sx1 - sx2.
Operator marker_observable();

/// 2 - eta^2/(1+eta^2) [1 - cos(4 tau sqrt(1+eta^2))]
double marker_variance(const ModelParams& p, double tau);

/// <O^2> - <O>^2 over a state vector.
double variance(const Operator& observable, const StateVector& psi);

/// Converts scaled time tau = J t to time in units of 1/gamma.
double tau_to_time(const ModelParams& p, double tau);

}  // namespace entfb::hamiltonian
