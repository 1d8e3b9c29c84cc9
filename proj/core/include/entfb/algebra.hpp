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

#include <span>

#include "entfb/types.hpp"

/// Fixed-basis two-qubit algebra: Pauli embeddings, lowering operators,
/// column-stacking vectorization and Lindblad superoperator assembly.
namespace entfb::algebra {

/// Default tolerance for algebraic identities on 4x4 problems.
inline constexpr double kTolerance = 1e-12;

/// Pauli operator on one site, identity on the other.
/// Convention: sz|e> = +|e>, sz|g> = -|g>, sy = [[0, -i], [i, 0]] in (e, g).
Operator pauli(Axis axis, Site site);

/// Lowering operator |g><e| on one site. With the sign convention above this
/// equals (sx - i sy) / 2; its adjoint is (sx + i sy) / 2.
Operator lowering(Site site);

/// c+ = (s1 + s2)/sqrt(2) for sign > 0, c- = (s1 - s2)/sqrt(2) otherwise.
Operator collective_lowering(int sign);

/// Swaps the roles of the two sites: U X U^dagger with U the SWAP gate.
Operator swap_sites(const Operator& m);

bool is_hermitian(const Operator& m, double tol = kTolerance);

/// Column-stacking: vec(m)[r + 4 c] = m(r, c).
VecOperator vectorize(const Operator& m);
Operator unvectorize(const VecOperator& v);
/// Throws ContractViolation if v.size() != 16.
Operator unvectorize(std::span<const Complex> v);

/// vec(I), the trace functional: tr(X) = trace_row() * vec(X).
Eigen::Matrix<Complex, 1, 16> trace_row();

/// Kronecker product of two 4x4 operators.
Superoperator kron(const Operator& a, const Operator& b);

/// vec(A X) = (I (x) A) vec(X)
Superoperator left_multiplication(const Operator& a);
/// vec(X B) = (B^T (x) I) vec(X)
Superoperator right_multiplication(const Operator& b);

/// Generator of X -> -i [H, X].
Superoperator hamiltonian_superoperator(const Operator& h);

/// D[a] X = a X a^dagger - a^dagger a X / 2 - X a^dagger a / 2.
Superoperator dissipator(const Operator& a);

/// Applies a superoperator to an operator through vectorization.
Operator apply(const Superoperator& s, const Operator& x);

}  // namespace entfb::algebra
