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

#include <complex>

#include <Eigen/Dense>

namespace entfb {

using Complex = std::complex<double>;

// Two-qubit operators live in a fixed product basis:
//   index 0 <-> |e>1|e>2, 1 <-> |g>1|e>2, 2 <-> |e>1|g>2, 3 <-> |g>1|g>2.
// Site 1 is the fast-varying label, so index = s1 + 2*s2 with e=0, g=1.
using Operator = Eigen::Matrix4cd;
using StateVector = Eigen::Vector4cd;

// Superoperators act on column-stacked 4x4 matrices.
using Superoperator = Eigen::Matrix<Complex, 16, 16>;
using VecOperator = Eigen::Matrix<Complex, 16, 1>;

enum class Axis { x, y, z };
enum class Site { one = 1, two = 2 };

namespace basis {
inline constexpr int ee = 0;
inline constexpr int ge = 1;
inline constexpr int eg = 2;
inline constexpr int gg = 3;
}  // namespace basis

/// Scaled model parameters. Rates are in units of the atomic decay rate,
/// which is fixed to one; lambda is in units of its square root.
struct ModelParams {
  double alpha = 0.0;   ///< local driving strength
  double J = 0.0;       ///< Ising coupling, H_int = 2 J sz1 sz2
  double lambda = 0.0;  ///< feedback strength
  static constexpr double gamma = 1.0;

  /// Drive-to-coupling ratio. Throws DomainError when J == 0.
  [[nodiscard]] double eta() const;
};

/// Basis ket |index>.
StateVector basis_ket(int index);

}  // namespace entfb
