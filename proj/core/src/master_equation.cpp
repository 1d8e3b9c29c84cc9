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

#include "entfb/master_equation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "entfb/algebra.hpp"
#include "entfb/errors.hpp"
#include "entfb/hamiltonian.hpp"

namespace entfb {

namespace {
std::string degeneracy_message(double s0, double s1) {
  std::ostringstream os;
  os.precision(3);
  os << "steady state is not unique: two smallest singular values of the generator are " << s0
     << " and " << s1;
  return os.str();
}
}  // namespace

DegenerateSteadyState::DegenerateSteadyState(double smallest, double second_smallest)
    : NumericalFailure(degeneracy_message(smallest, second_smallest)),
      smallest_(smallest),
      second_smallest_(second_smallest) {}

namespace master_equation {

using algebra::dissipator;
using algebra::hamiltonian_superoperator;

namespace {
constexpr Complex kI{0.0, 1.0};
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi * psi.adjoint());
}

double DensityMatrix::min_eigenvalue() const {
  const Operator herm = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

bool DensityMatrix::is_physical() const {
  return algebra::is_hermitian(m_, 1e-10) && std::abs(trace() - 1.0) <= 1e-10 &&
         min_eigenvalue() >= -1e-8;
}

SteadyStateCoefficients steady_state_coefficients(double alpha, double K) {
  const double a2 = alpha * alpha;
  const double a3 = a2 * alpha;
  const double a4 = a2 * a2;
  const double Xi = 64.0 * a4 + 16.0 * a2 + 1.0 + 16.0 * K * K;

  SteadyStateCoefficients c{};
  c.Xi = Xi;
  c.A = 16.0 * a4 / Xi;
  c.B1 = -8.0 * a3 / Xi;
  c.B2 = 0.0;
  c.C1 = -8.0 * a3 / Xi;
  c.C2 = 0.0;
  c.D1 = 4.0 * a2 / Xi;
  c.D2 = 16.0 * a2 * K / Xi;
  c.E = (16.0 * a4 + 4.0 * a2) / Xi;
  c.F1 = 4.0 * a2 / Xi;
  c.F2 = 0.0;
  c.G1 = -2.0 * alpha * (4.0 * a2 + 1.0) / Xi;
  c.G2 = -8.0 * alpha * K / Xi;
  c.H = (16.0 * a4 + 4.0 * a2) / Xi;
  c.I1 = -2.0 * alpha * (4.0 * a2 + 1.0) / Xi;
  c.I2 = -8.0 * alpha * K / Xi;
  c.L = (16.0 * a4 + 8.0 * a2 + 1.0 + 16.0 * K * K) / Xi;
  return c;
}

Operator assemble(const SteadyStateCoefficients& c) {
  const Complex B{c.B1, c.B2}, C{c.C1, c.C2}, D{c.D1, c.D2};
  const Complex F{c.F1, c.F2}, G{c.G1, c.G2}, I{c.I1, c.I2};
  Operator m;
  // Lower triangle is the conjugate of the upper one (entry (4,2) included).
  m << c.A, B, C, D,
       std::conj(B), c.E, F, G,
       std::conj(C), std::conj(F), c.H, I,
       std::conj(D), std::conj(G), std::conj(I), c.L;
  return m;
}

DensityMatrix analytic_steady_state(const ModelParams& p) {
  return DensityMatrix(assemble(steady_state_coefficients(p.alpha, 2.0 * p.J)));
}

Superoperator liouvillian_nofb(const ModelParams& p) {
  return hamiltonian_superoperator(hamiltonian::build_h_tot(p)) +
         dissipator(algebra::lowering(Site::one)) + dissipator(algebra::lowering(Site::two));
}

Superoperator liouvillian_nofb_collective(const ModelParams& p) {
  return hamiltonian_superoperator(hamiltonian::build_h_tot(p)) +
         dissipator(algebra::collective_lowering(+1)) +
         dissipator(algebra::collective_lowering(-1));
}

Operator feedback_operator(const ModelParams& p) {
  return p.lambda / std::sqrt(2.0) *
         (algebra::pauli(Axis::y, Site::one) - algebra::pauli(Axis::y, Site::two));
}

Superoperator liouvillian_fb(const ModelParams& p) {
  const Operator F = feedback_operator(p);
  const Operator c_plus = algebra::collective_lowering(+1);
  const Operator c_minus = algebra::collective_lowering(-1);
  const Operator feedback_hamiltonian = 0.5 * (c_minus.adjoint() * F + F * c_minus);
  return hamiltonian_superoperator(hamiltonian::build_h_tot(p)) + dissipator(c_plus) +
         dissipator(c_minus - kI * F) + hamiltonian_superoperator(feedback_hamiltonian);
}

bool is_trace_preserving(const Superoperator& L, double tol) {
  const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
  return (algebra::trace_row() * L).cwiseAbs().maxCoeff() <= tol * scale;
}

namespace {

using RealSuperoperator = Eigen::Matrix<double, 16, 16>;

// Columns are vec(s_i (x) s_j / 2), i, j in {1, x, y, z}: an orthonormal basis of
// Hermitian operators. A Hermiticity-preserving generator is real in it, and
// the change of basis is unitary, so singular values are unchanged.
const Superoperator& hermitian_basis() {
  static const Superoperator basis = [] {
    const std::array<Operator, 4> one{Operator::Identity(), algebra::pauli(Axis::x, Site::one),
                                      algebra::pauli(Axis::y, Site::one),
                                      algebra::pauli(Axis::z, Site::one)};
    const std::array<Operator, 4> two{Operator::Identity(), algebra::pauli(Axis::x, Site::two),
                                      algebra::pauli(Axis::y, Site::two),
                                      algebra::pauli(Axis::z, Site::two)};
    Superoperator b;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) b.col(4 * i + j) = algebra::vectorize(0.5 * one[i] * two[j]);
    return b;
  }();
  return basis;
}

RealSuperoperator real_form(const Superoperator& L) {
  const Superoperator& b = hermitian_basis();
  const Superoperator rotated = b.adjoint() * L * b;
  const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
  if (rotated.imag().cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw ContractViolation("generator does not preserve Hermiticity");
  return rotated.real();
}

std::array<double, 2> smallest_two(const RealSuperoperator& R) {
  Eigen::BDCSVD<RealSuperoperator> svd(R);
  const auto& s = svd.singularValues();
  return {s(15), s(14)};
}

}  // namespace

std::array<double, 2> smallest_singular_values(const Superoperator& L) {
  return smallest_two(real_form(L));
}

DensityMatrix steady_state(const Superoperator& L, const SteadyStateOptions& opts) {
  if (!is_trace_preserving(L))
    throw ContractViolation("steady_state: generator is not trace preserving");

  const RealSuperoperator R = real_form(L);
  const auto [s0, s1] = smallest_two(R);
  if (s1 < opts.degeneracy_threshold) throw DegenerateSteadyState(s0, s1);

  // 16 balance equations plus the normalization row tr(rho) = 1. In the
  // Pauli-product basis only the identity component carries trace (tr = 2).
  Eigen::Matrix<double, 17, 16> augmented;
  augmented.topRows<16>() = R;
  augmented.row(16).setZero();
  augmented(16, 0) = 2.0;
  Eigen::Matrix<double, 17, 1> rhs = Eigen::Matrix<double, 17, 1>::Zero();
  rhs(16) = 1.0;

  const Eigen::Matrix<double, 16, 1> coords = augmented.colPivHouseholderQr().solve(rhs);
  Operator rho = algebra::unvectorize(VecOperator(hermitian_basis() * coords.cast<Complex>()));
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace();

  const double residual = (L * algebra::vectorize(rho)).norm();
  const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
  if (!(residual <= opts.residual_tolerance * scale)) {
    std::ostringstream os;
    os << "steady_state: residual " << residual << " exceeds tolerance";
    throw NumericalFailure(os.str());
  }
  return DensityMatrix(rho);
}

DensityMatrix propagate(const DensityMatrix& rho0, const Superoperator& L, double t_final,
                        double dt, const PropagationObserver& observer) {
  if (!(dt > 0.0)) throw ContractViolation("propagate: dt must be positive");
  if (!(t_final >= 0.0)) throw ContractViolation("propagate: t_final must be non-negative");
  if (t_final == 0.0) return rho0;

  const long steps = std::max(1L, static_cast<long>(std::ceil(t_final / dt - 1e-9)));
  const Complex trace0 = rho0.trace();
  const double norm_limit = 10.0 * std::max(1.0, rho0.matrix().norm());

  VecOperator y = algebra::vectorize(rho0.matrix());
  for (long k = 0; k < steps; ++k) {
    const double h = k + 1 < steps ? dt : t_final - static_cast<double>(steps - 1) * dt;
    const VecOperator k1 = L * y;
    const VecOperator k2 = L * (y + 0.5 * h * k1);
    const VecOperator k3 = L * (y + 0.5 * h * k2);
    const VecOperator k4 = L * (y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const DensityMatrix rho(algebra::unvectorize(y));
    const double drift = std::abs(rho.trace() - trace0);
    const double norm = y.norm();
    if (!std::isfinite(norm) || norm > norm_limit || drift > 1e-6) {
      std::ostringstream os;
      os << "propagate: integration unstable at t = " << static_cast<double>(k + 1) * dt
         << " (trace drift " << drift << "); use a smaller dt";
      throw StepSizeError(os.str());
    }
    if (observer) observer(k + 1 < steps ? static_cast<double>(k + 1) * dt : t_final, rho);
  }
  return DensityMatrix(algebra::unvectorize(y));
}

double suggested_dt(const ModelParams& p) {
  const double rate = std::max({1.0, 4.0 * p.alpha * p.alpha, 4.0 * p.J * p.J,
                                2.0 * p.lambda * p.lambda});
  return 0.05 / rate;
}

}  // namespace master_equation
}  // namespace entfb
