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

#include "entfb/algebra.hpp"

#include <cmath>
#include <string>

#include "entfb/errors.hpp"

namespace entfb {

double ModelParams::eta() const {
  if (J == 0.0) throw DomainError("eta = alpha/J is undefined for J = 0");
  return alpha / J;
}

StateVector basis_ket(int index) {
  if (index < 0 || index > 3) throw ContractViolation("basis index out of range");
  StateVector v = StateVector::Zero();
  v(index) = 1.0;
  return v;
}

namespace algebra {
namespace {

using Single = Eigen::Matrix2cd;

constexpr Complex kI{0.0, 1.0};

Single single_site(Axis axis) {
  Single m;
  switch (axis) {
    case Axis::x:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Axis::y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case Axis::z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

// Site 1 is the fast index, so the site-2 factor goes first in the product.
Operator embed(const Single& op, Site site) {
  Operator out = Operator::Zero();
  const Single id = Single::Identity();
  const Single& slow = site == Site::two ? op : id;
  const Single& fast = site == Site::two ? id : op;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out.block<2, 2>(2 * a, 2 * b) = slow(a, b) * fast;
  return out;
}

}  // namespace

Operator pauli(Axis axis, Site site) { return embed(single_site(axis), site); }

Operator lowering(Site site) {
  Single s = Single::Zero();
  s(1, 0) = 1.0;  // |g><e|
  return embed(s, site);
}

Operator collective_lowering(int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  return (lowering(Site::one) + s * lowering(Site::two)) / std::sqrt(2.0);
}

Operator swap_sites(const Operator& m) {
  Operator swap = Operator::Zero();
  swap(basis::ee, basis::ee) = 1.0;
  swap(basis::gg, basis::gg) = 1.0;
  swap(basis::ge, basis::eg) = 1.0;
  swap(basis::eg, basis::ge) = 1.0;
  return swap * m * swap.adjoint();
}

bool is_hermitian(const Operator& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

VecOperator vectorize(const Operator& m) {
  return Eigen::Map<const VecOperator>(m.data());
}

Operator unvectorize(const VecOperator& v) { return Eigen::Map<const Operator>(v.data()); }

Operator unvectorize(std::span<const Complex> v) {
  if (v.size() != 16)
    throw ContractViolation("unvectorize expects 16 entries, got " + std::to_string(v.size()));
  return Eigen::Map<const Operator>(v.data());
}

Eigen::Matrix<Complex, 1, 16> trace_row() { return vectorize(Operator::Identity()).transpose(); }

Superoperator kron(const Operator& a, const Operator& b) {
  Superoperator out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.block<4, 4>(4 * r, 4 * c) = a(r, c) * b;
  return out;
}

Superoperator left_multiplication(const Operator& a) { return kron(Operator::Identity(), a); }

Superoperator right_multiplication(const Operator& b) {
  return kron(b.transpose(), Operator::Identity());
}

Superoperator hamiltonian_superoperator(const Operator& h) {
  return -kI * (left_multiplication(h) - right_multiplication(h));
}

Superoperator dissipator(const Operator& a) {
  const Operator ada = a.adjoint() * a;
  return kron(a.conjugate(), a) - 0.5 * left_multiplication(ada) - 0.5 * right_multiplication(ada);
}

Operator apply(const Superoperator& s, const Operator& x) {
  return unvectorize(VecOperator(s * vectorize(x)));
}

}  // namespace algebra
}  // namespace entfb
