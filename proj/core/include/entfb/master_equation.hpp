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
#include <functional>

#include "entfb/types.hpp"

namespace entfb::master_equation {

/// A 4x4 density matrix. Construction does not enforce physicality;
/// use check() or is_physical() where it matters.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(const Operator& m) : m_(m) {}

  static DensityMatrix pure(const StateVector& psi);

  const Operator& matrix() const noexcept { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  Complex trace() const { return m_.trace(); }
  double min_eigenvalue() const;

  /// Hermitian within 1e-10, unit trace within 1e-10, min eigenvalue >= -1e-8.
  bool is_physical() const;

 private:
  Operator m_ = Operator::Zero();
};

/// Real coefficients of the stationary state without feedback, for the
/// generator -i[alpha (sy1+sy2) + K sz1 sz2, .] + D[s1] + D[s2].
struct SteadyStateCoefficients {
  double A, B1, B2, C1, C2, D1, D2, E, F1, F2, G1, G2, H, I1, I2, L;
  double Xi;
};

/// Closed-form coefficients in terms of the drive alpha and the sz1 sz2
/// coefficient K of the Hamiltonian. For ModelParams, K = 2 J.
SteadyStateCoefficients steady_state_coefficients(double alpha, double K);

/// Assembles the Hermitian matrix from the coefficients.
Operator assemble(const SteadyStateCoefficients& c);

/// Closed-form stationary state of liouvillian_nofb(p).
DensityMatrix analytic_steady_state(const ModelParams& p);

/// -i[H_tot, .] + D[s1] + D[s2]
Superoperator liouvillian_nofb(const ModelParams& p);
/// -i[H_tot, .] + D[c+] + D[c-]; identical to liouvillian_nofb.
Superoperator liouvillian_nofb_collective(const ModelParams& p);

/// F = lambda/sqrt(2) (sy1 - sy2)
Operator feedback_operator(const ModelParams& p);

/// Homodyne-mediated feedback generator:
///   -i[H_tot, .] + D[c+] + D[c- - iF] - (i/2)[c-^dagger F + F c-, .]
Superoperator liouvillian_fb(const ModelParams& p);

/// True if vec(I)^dagger is a left null vector of L to tol * max(1, |L|).
bool is_trace_preserving(const Superoperator& L, double tol = 1e-10);

struct SteadyStateOptions {
  /// Second-smallest singular value of L below this flags degeneracy.
  double degeneracy_threshold = 1e-10;
  /// Allowed |L vec(rho)| relative to max(1, |L|).
  double residual_tolerance = 1e-10;
};

/// Stationary state: solves L vec(rho) = 0 with tr(rho) = 1 appended as a
/// 17th row, in the least-squares sense. Throws ContractViolation if L is not
/// trace preserving, DegenerateSteadyState if the null space is not
/// one-dimensional, NumericalFailure if the residual is out of tolerance.
/// L must preserve Hermiticity (ContractViolation otherwise); the system is
/// solved in real arithmetic in an orthonormal Hermitian operator basis.
DensityMatrix steady_state(const Superoperator& L, const SteadyStateOptions& opts = {});

/// Two smallest singular values of L, smallest first.
std::array<double, 2> smallest_singular_values(const Superoperator& L);

/// Called after every RK4 step with the current time and state.
using PropagationObserver = std::function<void(double t, const DensityMatrix& rho)>;

/// Fixed-step RK4 on vec(rho)' = L vec(rho). The last step is shortened to
/// land exactly on t_final. Throws ContractViolation for dt <= 0 or
/// t_final < 0, StepSizeError if the trace drifts by more than 1e-6 or the
/// state blows up. Suggested dt <= 0.05 / max(1, 4 alpha^2, 4 J^2, 2 lambda^2).
DensityMatrix propagate(const DensityMatrix& rho0, const Superoperator& L, double t_final,
                        double dt, const PropagationObserver& observer = {});

/// Step size following the guidance above.
double suggested_dt(const ModelParams& p);

}  // namespace entfb::master_equation
