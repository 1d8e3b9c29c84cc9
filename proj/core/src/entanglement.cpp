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

#include "entfb/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "entfb/algebra.hpp"
#include "entfb/errors.hpp"

namespace entfb::entanglement {

namespace {

// Moduli below this are roundoff and are taken as exactly zero.
constexpr double kModulusFloor = 1e-12;
constexpr double kMaxImaginary = 1e-6;

const Operator& yy() {
  static const Operator m =
      algebra::pauli(Axis::y, Site::one) * algebra::pauli(Axis::y, Site::two);
  return m;
}

ConcurrenceResult from_squared(std::array<double, 4> moduli) {
  ConcurrenceResult out;
  for (int k = 0; k < 4; ++k)
    out.xi[k] = moduli[k] < kModulusFloor ? 0.0 : std::sqrt(moduli[k]);
  // Ties do not matter: only the sum of the three smallest enters.
  std::sort(out.xi.begin(), out.xi.end(), std::greater<>());
  out.value = std::max(0.0, out.xi[0] - out.xi[1] - out.xi[2] - out.xi[3]);
  return out;
}

}  // namespace

Operator spin_flip(const Operator& rho) { return yy() * rho.conjugate() * yy(); }

ConcurrenceResult concurrence(const DensityMatrix& rho) {
  const Operator product = rho.matrix() * spin_flip(rho.matrix());
  Eigen::ComplexEigenSolver<Operator> solver(product, false);
  if (solver.info() != Eigen::Success)
    throw NumericDegeneracy("concurrence: eigensolver did not converge");

  const auto& ev = solver.eigenvalues();
  bool bad = false;
  std::array<double, 4> moduli{};
  for (int k = 0; k < 4; ++k) {
    if (!std::isfinite(ev(k).real()) || !std::isfinite(ev(k).imag()) ||
        std::abs(ev(k).imag()) >= kMaxImaginary)
      bad = true;
    moduli[k] = std::abs(ev(k));
  }
  if (bad) {
    std::ostringstream os;
    os << "concurrence: spectrum of rho*rho_tilde is not real non-negative:";
    for (int k = 0; k < 4; ++k) os << ' ' << ev(k);
    throw NumericDegeneracy(os.str());
  }
  return from_squared(moduli);
}

ConcurrenceResult concurrence_hermitian(const DensityMatrix& rho) {
  const Operator herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> rho_solver(herm);
  const Eigen::Vector4d roots = rho_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Operator sqrt_rho =
      rho_solver.eigenvectors() * roots.cast<Complex>().asDiagonal() *
      rho_solver.eigenvectors().adjoint();

  Operator r = sqrt_rho * spin_flip(herm) * sqrt_rho;
  r = 0.5 * (r + r.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> r_solver(r, Eigen::EigenvaluesOnly);
  std::array<double, 4> moduli{};
  for (int k = 0; k < 4; ++k) moduli[k] = std::max(0.0, r_solver.eigenvalues()(k));
  return from_squared(moduli);
}

double concurrence_pure(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw ContractViolation("concurrence_pure: state vector is not normalized");
  return 2.0 * std::abs(psi(basis::ee) * psi(basis::gg) - psi(basis::ge) * psi(basis::eg));
}

}  // namespace entfb::entanglement
