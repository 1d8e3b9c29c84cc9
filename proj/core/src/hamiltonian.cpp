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

#include "entfb/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "entfb/algebra.hpp"
#include "entfb/errors.hpp"

namespace entfb::hamiltonian {

using algebra::pauli;

namespace {

constexpr Complex kI{0.0, 1.0};

double checked_eta(const ModelParams& p, const char* what) {
  if (p.J == 0.0 || p.alpha == 0.0)
    throw DomainError(std::string(what) +
                      ": closed form requires alpha != 0 and J != 0; use the numeric "
                      "eigensystem instead");
  return p.eta();
}

}  // namespace

Operator build_h_int(const ModelParams& p) {
  return 2.0 * p.J * pauli(Axis::z, Site::one) * pauli(Axis::z, Site::two);
}

Operator build_h_drive(const ModelParams& p) {
  return p.alpha * (pauli(Axis::y, Site::one) + pauli(Axis::y, Site::two));
}

Operator build_h_tot(const ModelParams& p) { return build_h_drive(p) + build_h_int(p); }

EigenSystem analytic_eigensystem(const ModelParams& p) {
  const double eta = checked_eta(p, "analytic_eigensystem");
  const double root = std::sqrt(1.0 + eta * eta);
  const double n_plus = 2.0 * std::sqrt(1.0 + eta * eta + root);
  const double n_minus = 2.0 * std::sqrt(1.0 + eta * eta - root);

  const StateVector ee = basis_ket(basis::ee);
  const StateVector ge = basis_ket(basis::ge);
  const StateVector eg = basis_ket(basis::eg);
  const StateVector gg = basis_ket(basis::gg);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  EigenSystem es;
  es.vectors[0] = (eta / n_plus) * (gg - ee) + kI * ((1.0 + root) / n_plus) * (eg + ge);
  es.vectors[1] = inv_sqrt2 * (eg - ge);
  es.vectors[2] = inv_sqrt2 * (gg + ee);
  es.vectors[3] = (eta / n_minus) * (gg - ee) + kI * ((1.0 - root) / n_minus) * (eg + ge);

  // Signed in J: the vectors above are written in eta = alpha / J, so for
  // J < 0 the outer pair trades places.
  const double big = 2.0 * p.J * root;
  es.energies = {-big, -2.0 * p.J, 2.0 * p.J, big};
  return es;
}

EigenSystem numeric_eigensystem(const Operator& h) {
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (!algebra::is_hermitian(h, 1e-12 * scale))
    throw ContractViolation("numeric_eigensystem: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Operator> solver(h);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("numeric_eigensystem: Hermitian eigensolver did not converge");
  EigenSystem es;
  for (int k = 0; k < 4; ++k) {
    es.energies[k] = solver.eigenvalues()(k);
    es.vectors[k] = solver.eigenvectors().col(k);
  }
  return es;
}

InitialExpansion initial_expansion(const ModelParams& p) {
  const double eta = checked_eta(p, "initial_expansion");
  const double root = std::sqrt(1.0 + eta * eta);
  const double denom = 2.0 * eta * root;
  InitialExpansion ex;
  ex.coefficients[0] = -(1.0 - root) * std::sqrt(1.0 + eta * eta + root) / denom;
  ex.coefficients[1] = 0.0;
  ex.coefficients[2] = 1.0 / std::sqrt(2.0);
  ex.coefficients[3] = (1.0 + root) * std::sqrt(1.0 + eta * eta - root) / denom;
  return ex;
}

StateVector evolve_closed(const ModelParams& p, double tau) {
  const EigenSystem es = analytic_eigensystem(p);
  const InitialExpansion ex = initial_expansion(p);
  const double t = tau_to_time(p, tau);
  StateVector psi = StateVector::Zero();
  for (int k = 0; k < 4; ++k)
    psi += ex.coefficients[k] * std::exp(-kI * es.energies[k] * t) * es.vectors[k];
  return psi;
}

StateVector evolve_closed_numeric(const ModelParams& p, double tau) {
  const EigenSystem es = numeric_eigensystem(build_h_tot(p));
  const double t = tau_to_time(p, tau);
  const StateVector gg = basis_ket(basis::gg);
  StateVector psi = StateVector::Zero();
  for (int k = 0; k < 4; ++k)
    psi += es.vectors[k].dot(gg) * std::exp(-kI * es.energies[k] * t) * es.vectors[k];
  return psi;
}

Operator marker_observable() { return pauli(Axis::x, Site::one) - pauli(Axis::x, Site::two); }

double marker_variance(const ModelParams& p, double tau) {
  const double eta = checked_eta(p, "marker_variance");
  const double e2 = eta * eta;
  return 2.0 - e2 / (1.0 + e2) * (1.0 - std::cos(4.0 * tau * std::sqrt(1.0 + e2)));
}

double variance(const Operator& observable, const StateVector& psi) {
  const StateVector o_psi = observable * psi;
  const double mean = psi.dot(o_psi).real();
  return o_psi.squaredNorm() - mean * mean;
}

double tau_to_time(const ModelParams& p, double tau) {
  if (p.J == 0.0) throw DomainError("scaled time tau = J t is undefined for J = 0");
  return tau / p.J;
}

}  // namespace entfb::hamiltonian
